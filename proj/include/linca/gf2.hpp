#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linca
{

/// Largest supported vector length; a row always fits in one machine word.
inline constexpr std::size_t max_width = 64;

/*! \brief Fixed-length vector over GF(2)

  Position 0 is the leftmost cell x_1 and is the most significant bit of the
  decimal view, so "1011" has value 11.
*/
class BitVector
{
public:
  BitVector() = default;
  BitVector( std::size_t width, std::uint64_t value );

  static BitVector zeros( std::size_t width ) { return BitVector( width, 0 ); }
  static BitVector ones( std::size_t width );
  static BitVector unit( std::size_t width, std::size_t pos );
  /// Parses a string of '0'/'1' characters, leftmost character first.
  static BitVector parse( std::string_view bits );

  std::size_t width() const noexcept { return width_; }
  std::uint64_t value() const noexcept { return value_; }

  bool get( std::size_t pos ) const;
  BitVector with( std::size_t pos, bool bit ) const;
  BitVector flipped( std::size_t pos ) const;

  bool is_zero() const noexcept { return value_ == 0; }
  std::size_t weight() const noexcept;
  bool parity() const noexcept { return weight() & 1u; }
  /// Leftmost position holding a 1, if any.
  std::optional<std::size_t> first_set() const noexcept;

  std::string to_string() const;

  BitVector operator^( const BitVector& other ) const;
  BitVector operator&( const BitVector& other ) const;
  BitVector operator~() const;

  bool operator==( const BitVector& ) const = default;
  auto operator<=>( const BitVector& ) const = default;

private:
  static std::uint64_t mask( std::size_t width ) noexcept
  {
    return width >= 64 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << width ) - 1u );
  }

  std::size_t width_ = 0;
  std::uint64_t value_ = 0;
};

/// Parity of the bitwise AND, i.e. the GF(2) inner product.
bool dot( const BitVector& a, const BitVector& b );

/*! \brief Square binary matrix acting on column vectors

  Rows are stored as BitVectors of the same width as the matrix.
*/
class Gf2Matrix
{
public:
  Gf2Matrix() = default;
  explicit Gf2Matrix( std::vector<BitVector> rows );

  static Gf2Matrix zero( std::size_t n );
  static Gf2Matrix identity( std::size_t n );
  /// One row per line, '0'/'1' characters, no separators.
  static Gf2Matrix parse( std::string_view text );

  std::size_t size() const noexcept { return rows_.size(); }
  const BitVector& row( std::size_t i ) const { return rows_.at( i ); }
  std::span<const BitVector> rows() const noexcept { return rows_; }
  bool at( std::size_t i, std::size_t j ) const { return rows_.at( i ).get( j ); }

  Gf2Matrix with_row( std::size_t i, const BitVector& r ) const;
  std::size_t distinct_rows() const;

  std::string to_text() const;

  bool operator==( const Gf2Matrix& ) const = default;
  auto operator<=>( const Gf2Matrix& ) const = default;

private:
  std::vector<BitVector> rows_;
};

/// No binary matrix maps the given input to the requested output.
class NoMatrixError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Mod-2 matrix-vector product; throws std::invalid_argument on size mismatch.
BitVector mat_vec_mul( const Gf2Matrix& m, const BitVector& x );

/// GF(2) row rank.
std::size_t rank( const Gf2Matrix& m );
inline std::size_t nullity( const Gf2Matrix& m ) { return m.size() - rank( m ); }

/// Linear equation on the unknown row r: parity(r AND input) == target.
struct RowConstraint
{
  BitVector input;
  bool target = false;
};

/*! \brief Solution set of a system of RowConstraints

  The solutions form an affine subspace of dimension `free_dims` (when
  consistent).  `members` lists every solution in increasing order for widths
  up to `enumeration_limit`; beyond that it holds only the canonical
  (numerically smallest) solution.
*/
struct RowSolutionSet
{
  static constexpr std::size_t enumeration_limit = 8;

  std::size_t width = 0;
  bool consistent = false;
  std::size_t free_dims = 0;
  std::vector<BitVector> members;

  bool empty() const noexcept { return !consistent; }
  /// Number of solutions; only meaningful when free_dims < 64.
  std::uint64_t count() const noexcept
  {
    return consistent ? ( std::uint64_t{ 1 } << free_dims ) : 0u;
  }
  std::optional<BitVector> canonical() const
  {
    return members.empty() ? std::nullopt : std::optional{ members.front() };
  }
};

/// Solves for all rows r of the given width satisfying every constraint.
RowSolutionSet solve_row( std::size_t width, std::span<const RowConstraint> constraints );

/// Consistency of the system without building the solution set.
bool row_system_consistent( std::size_t width, std::span<const RowConstraint> constraints );

} // namespace linca
