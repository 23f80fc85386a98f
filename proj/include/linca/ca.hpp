#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <linca/gf2.hpp>
#include <linca/rule.hpp>

namespace linca
{

/// An n-cell configuration; position 0 is cell x_1 (the MSB of the decimal view).
using State = BitVector;

enum class Boundary
{
  Null,
  Periodic
};

std::string_view to_string( Boundary b );
/// Accepts "nb"/"null" and "pb"/"periodic"; throws std::invalid_argument otherwise.
Boundary parse_boundary( std::string_view s );

/// Per-cell rules plus a boundary condition; uniform when all rules agree.
class CaConfig
{
public:
  static constexpr std::size_t min_cells = 3;

  CaConfig( std::vector<Rule> cell_rules, Boundary boundary );
  static CaConfig uniform( Rule rule, std::size_t n, Boundary boundary );

  std::size_t size() const noexcept { return rules_.size(); }
  Boundary boundary() const noexcept { return boundary_; }
  std::span<const Rule> rules() const noexcept { return rules_; }
  Rule rule( std::size_t cell ) const { return rules_.at( cell ); }
  bool is_uniform() const noexcept;

  /// Renders as "<103,234,90,0>NB".
  std::string to_string() const;

private:
  std::vector<Rule> rules_;
  Boundary boundary_;
};

/// Neighborhood value 4*left + 2*self + right of a cell under the given boundary.
unsigned neighborhood( const State& s, std::size_t cell, Boundary boundary );

State step( const CaConfig& ca, const State& s );

/// Raw-word variant of step for enumeration; `s` must fit in ca.size() bits.
std::uint64_t step_word( const CaConfig& ca, std::uint64_t s );

/// State transition diagram of a CA, nodes labelled by decimal state value.
class StdGraph
{
public:
  static constexpr std::size_t max_cells = 20;

  std::size_t cells() const noexcept { return n_; }
  Boundary boundary() const noexcept { return boundary_; }
  std::size_t node_count() const noexcept { return successor_.size(); }

  std::uint32_t successor( std::uint32_t s ) const { return successor_.at( s ); }
  std::span<const std::uint32_t> successors() const noexcept { return successor_; }
  std::span<const std::uint32_t> predecessors( std::uint32_t s ) const;
  std::size_t in_degree( std::uint32_t s ) const { return predecessors( s ).size(); }

  /// Each cycle starts at its smallest state; cycles are ordered by that state.
  const std::vector<std::vector<std::uint32_t>>& cycles() const noexcept { return cycles_; }
  const std::vector<std::uint32_t>& garden_of_eden() const noexcept { return garden_of_eden_; }

private:
  friend StdGraph build_std( const CaConfig& ca );

  std::size_t n_ = 0;
  Boundary boundary_ = Boundary::Null;
  std::vector<std::uint32_t> successor_;
  std::vector<std::uint32_t> pred_offsets_;
  std::vector<std::uint32_t> preds_;
  std::vector<std::vector<std::uint32_t>> cycles_;
  std::vector<std::uint32_t> garden_of_eden_;
};

/// Throws std::invalid_argument when ca.size() exceeds StdGraph::max_cells.
StdGraph build_std( const CaConfig& ca );

struct StdStats
{
  std::size_t cycle_count = 0;
  std::vector<std::size_t> cycle_lengths; // ascending
  std::size_t garden_of_eden_count = 0;
  std::size_t max_in_degree = 0;
};

StdStats std_stats( const StdGraph& g );

std::string to_dot( const StdGraph& g );
std::string to_json( const StdGraph& g );

} // namespace linca
