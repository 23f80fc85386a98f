#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <linca/ca.hpp>
#include <linca/gf2.hpp>
#include <linca/rule.hpp>

namespace linca
{

/// Neighborhoods (0..7) on which g and f disagree, ascending.
std::vector<unsigned> mismatch_patterns( Rule g, Rule f );

/// True when some cell of s sees one of the patterns.
bool contains_pattern( const State& s, const std::vector<unsigned>& patterns, Boundary boundary );

/// All n-cell states containing a mismatch pattern, ascending by value.
std::vector<State> deviant_states( Rule g, Rule f, std::size_t n, Boundary boundary );

/// Successor of u under uniform g, obtained from the uniform-f successor by
/// flipping every cell whose neighborhood in u is a mismatch pattern.
State corrected_successor( const State& u, Rule g, Rule f, Boundary boundary );

/*! \brief Repairs `base` so that it maps u to v_target

  Rows whose parity against u is wrong get their entry at the leftmost set
  column of u flipped; all other rows are kept.  Throws NoMatrixError when
  u is zero and v_target is not.
*/
Gf2Matrix deviant_matrix( const Gf2Matrix& base, const State& u, const State& v_target );

struct DeviantReport
{
  Rule nonlinear_rule;
  Rule linear_rule;
  std::vector<Rule> linear_witnesses;
  std::vector<unsigned> patterns;
  std::size_t n = 0;
  Boundary boundary = Boundary::Null;
  std::vector<State> deviant_states;
  /// Keyed by state value.  The zero state never has an entry.
  std::map<std::uint64_t, Gf2Matrix> matrices;
  /// Jacobian of the linear rule; the handle for every non-deviant state.
  Gf2Matrix base_matrix;
  /// The zero state is deviant (g odd) and is served by complementing A*0.
  bool zero_state_complement = false;

  std::size_t deviant_count() const noexcept { return deviant_states.size(); }
  std::uint64_t state_count() const noexcept { return std::uint64_t{ 1 } << n; }
  double ratio() const noexcept { return static_cast<double>( deviant_count() ) / static_cast<double>( state_count() ); }
  /// Unreduced "k/2^n", e.g. "3/16".
  std::string ratio_string() const;
  bool is_deviant( const State& s ) const;
};

/// Decomposes uniform g against its nearest linear rule (smallest id on ties).
DeviantReport analyze( Rule g, std::size_t n, Boundary boundary );

std::string to_json( const DeviantReport& report );

} // namespace linca
