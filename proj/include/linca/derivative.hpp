#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <linca/ca.hpp>
#include <linca/gf2.hpp>
#include <linca/rule.hpp>

namespace linca
{

/// Neighborhood slot of a 3-variable rule; the value is the ANF monomial bit.
enum class Var : unsigned
{
  X = 4, // left
  Y = 2, // self
  Z = 1  // right
};

/// First-order Boolean derivative, computed by ANF differentiation.
Rule derivative( Rule f, Var v );

/// Partial evaluation: the rule with slot v fixed to `value` (no longer depends on v).
Rule restrict( Rule f, Var v, bool value );

/*! \brief Symbolic Jacobian of a CA

  Entry (i, j) is a 3-variable rule over the neighborhood of cell i giving
  the derivative of cell i's local map with respect to cell j.  Entries
  outside the neighborhood are the zero rule.
*/
class Jacobian
{
public:
  Jacobian( std::size_t n, Boundary boundary );

  std::size_t size() const noexcept { return n_; }
  Boundary boundary() const noexcept { return boundary_; }
  Rule entry( std::size_t i, std::size_t j ) const { return entries_.at( i * n_ + j ); }
  void set( std::size_t i, std::size_t j, Rule r ) { entries_.at( i * n_ + j ) = r; }

  bool is_constant() const;
  /// One row per line; constant entries as 0/1, others as their ANF string.
  std::string to_text() const;

  bool operator==( const Jacobian& ) const = default;
  auto operator<=>( const Jacobian& ) const = default;

private:
  std::size_t n_;
  Boundary boundary_;
  std::vector<Rule> entries_;
};

Jacobian jacobian( const CaConfig& ca );

/// Substitutes a concrete state into every entry.
Gf2Matrix evaluate( const Jacobian& j, const State& s );

/// The Jacobian as a binary matrix when every entry is constant.
std::optional<Gf2Matrix> constant_jacobian( const CaConfig& ca );

} // namespace linca
