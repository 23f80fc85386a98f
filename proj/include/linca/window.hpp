#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <linca/ca.hpp>
#include <linca/gf2.hpp>
#include <linca/rule.hpp>

namespace linca
{

/// A 4-cell block of a state.
class Window
{
public:
  static constexpr std::size_t width = 4;

  explicit Window( const BitVector& bits );
  static Window from_value( unsigned v ) { return Window( BitVector( width, v ) ); }

  const BitVector& bits() const noexcept { return bits_; }
  unsigned value() const noexcept { return static_cast<unsigned>( bits_.value() ); }
  bool is_zero() const noexcept { return bits_.is_zero(); }

  bool operator==( const Window& ) const = default;

private:
  BitVector bits_;
};

/// Single-monomial rules: xyz, xy, xz, x, yz, y, z, 1 (ids 128 192 160 240 136 204 170 255).
std::vector<Rule> fundamental_rules();

/// One periodic-boundary step of the 4-cell block under the uniform rule.
BitVector window_output( Rule rule, const Window& w );

/// Number of n x n matrices A with A * input == output.
std::uint64_t count_matrices( const BitVector& input, const BitVector& output );
std::uint64_t count_matrices( Rule rule, const Window& w );

/*! \brief Transformation matrix with at most two distinct rows

  Rows for 0 output bits are zero; rows for 1 output bits are the unit row at
  the leftmost set position of the input.  Throws NoMatrixError when the
  input is zero and the output is not.
*/
Gf2Matrix canonical_matrix( const BitVector& input, const BitVector& output );
Gf2Matrix canonical_matrix( Rule rule, const Window& w );

enum class ZeroWindowMode
{
  ZeroMatrix, // even rule: A * 0000 = 0000 for any A
  Complement  // odd rule: output is the complement of A * 0000
};

/// A covering set of 4x4 matrices for every window of one rule.
struct WindowMatrixSet
{
  Rule rule;
  /// Zero matrix first, then identity, then the rest in lexicographic order.
  std::vector<Gf2Matrix> members;
  /// Member index to use for each window value 0..15.
  std::array<std::size_t, 16> assignment{};
  ZeroWindowMode zero_window_mode = ZeroWindowMode::ZeroMatrix;

  const Gf2Matrix& matrix_for( const Window& w ) const { return members.at( assignment[w.value()] ); }
  /// Product with the assigned matrix, complemented for the zero window of odd rules.
  BitVector apply( const Window& w ) const;
};

/// Smallest set of matrices covering all 15 nonzero windows (exact search).
WindowMatrixSet minimal_matrix_set( Rule rule );

/// Shared, lazily built minimal sets for all 256 rules.  Thread-safe.
const WindowMatrixSet& matrix_table( Rule rule );

struct WindowStep
{
  Window window;
  std::size_t member = 0;
  BitVector product;
  bool complemented = false;
};

/// One periodic-boundary step computed block by block; n must be even and >= 4.
State evolve_windowed( const WindowMatrixSet& table, const State& s );
State evolve_windowed( Rule rule, const State& s );

/// Per-block windows, matrices and products for one windowed step.
std::vector<WindowStep> evolve_windowed_trace( const WindowMatrixSet& table, const State& s );

} // namespace linca
