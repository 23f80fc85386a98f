#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace linca
{

/*! \brief A 3-variable Boolean function identified by its Wolfram number

  The neighborhood (x, y, z) = (left, self, right) is indexed as 4x + 2y + z
  and bit i of the Wolfram number is the output on neighborhood i.  The ANF
  is stored the same way: bit m is set when the monomial whose variables are
  the set bits of m (x = 4, y = 2, z = 1, constant = 0) is present.
*/
class Rule
{
public:
  constexpr Rule() = default;
  /// Throws std::invalid_argument unless 0 <= id <= 255.
  explicit Rule( int wolfram_id );

  static Rule from_truth_table( std::uint8_t bits ) { return Rule( static_cast<int>( bits ) ); }
  static Rule from_anf( std::uint8_t anf );

  constexpr int id() const noexcept { return id_; }
  constexpr std::uint8_t truth_table() const noexcept { return static_cast<std::uint8_t>( id_ ); }
  constexpr bool output( unsigned neighborhood ) const noexcept { return ( id_ >> ( neighborhood & 7u ) ) & 1u; }
  bool operator()( bool x, bool y, bool z ) const noexcept { return output( 4u * x + 2u * y + z ); }

  std::uint8_t anf() const noexcept;
  bool has_term( unsigned monomial ) const noexcept { return ( anf() >> monomial ) & 1u; }
  int degree() const noexcept;
  std::size_t weight() const noexcept;

  /// Odd Wolfram number, equivalently f(000) = 1 and constant ANF term.
  bool is_odd() const noexcept { return id_ & 1; }
  bool is_constant() const noexcept { return id_ == 0 || id_ == 255; }

  /// 8-character binary string, leftmost character is the output on 111.
  std::string binary() const;
  /// ANF as a string such as "x⊕y⊕z"; "0" for the zero function.
  std::string anf_string() const;

  constexpr bool operator==( const Rule& ) const = default;
  constexpr auto operator<=>( const Rule& ) const = default;

private:
  int id_ = 0;
};

/// Möbius transform over the 3-cube; it is its own inverse.
std::uint8_t moebius( std::uint8_t bits );

/// Monomial name for an ANF index, e.g. 6 -> "xy", 0 -> "1".
std::string monomial_name( unsigned monomial );

Rule make_rule( int wolfram_id );
Rule complement( Rule r );
int hamming( Rule f, Rule g );

bool is_linear( Rule r );
bool is_affine( Rule r );
/// {0, 60, 90, 102, 150, 170, 204, 240}
std::vector<Rule> linear_rules();
/// Linear rules and their complements, 16 in total, sorted by id.
std::vector<Rule> affine_rules();

struct NearestResult
{
  int distance = 0;
  std::vector<Rule> witnesses; // sorted by id

  Rule first() const { return witnesses.front(); }
};

/// Minimum Hamming distance to the affine set (the degree of non-linearity).
NearestResult nearest_affine( Rule f );
/// Same search restricted to the 8 linear rules.
NearestResult nearest_linear( Rule f );

struct DistancePartition
{
  Rule reference;
  std::array<std::vector<Rule>, 9> classes; // index = distance from reference

  std::array<std::size_t, 9> sizes() const;
  int class_of( Rule r ) const { return hamming( reference, r ); }
};

DistancePartition distance_partition( Rule g );

} // namespace linca
