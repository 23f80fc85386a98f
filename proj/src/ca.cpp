#include <linca/ca.hpp>

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace linca
{

std::string_view to_string( Boundary b )
{
  return b == Boundary::Null ? "nb" : "pb";
}

Boundary parse_boundary( std::string_view s )
{
  if ( s == "nb" || s == "null" || s == "NB" )
  {
    return Boundary::Null;
  }
  if ( s == "pb" || s == "periodic" || s == "PB" )
  {
    return Boundary::Periodic;
  }
  throw std::invalid_argument( "unknown boundary '" + std::string( s ) + "', expected nb or pb" );
}

CaConfig::CaConfig( std::vector<Rule> cell_rules, Boundary boundary )
    : rules_( std::move( cell_rules ) ), boundary_( boundary )
{
  if ( rules_.size() < min_cells || rules_.size() > max_width )
  {
    throw std::invalid_argument( "a CA needs between 3 and 64 cells, got " + std::to_string( rules_.size() ) );
  }
}

CaConfig CaConfig::uniform( Rule rule, std::size_t n, Boundary boundary )
{
  return CaConfig( std::vector<Rule>( n, rule ), boundary );
}

bool CaConfig::is_uniform() const noexcept
{
  return std::all_of( rules_.begin(), rules_.end(), [this]( Rule r ) { return r == rules_.front(); } );
}

std::string CaConfig::to_string() const
{
  std::string s = "<";
  for ( std::size_t i = 0; i < rules_.size(); ++i )
  {
    if ( i != 0 )
    {
      s += ',';
    }
    s += std::to_string( rules_[i].id() );
  }
  s += boundary_ == Boundary::Null ? ">NB" : ">PB";
  return s;
}

namespace
{

inline unsigned neighborhood_word( std::uint64_t s, std::size_t n, std::size_t cell, Boundary boundary )
{
  const auto bit = [&]( std::size_t pos ) -> unsigned { return ( s >> ( n - 1 - pos ) ) & 1u; };
  unsigned left = 0;
  unsigned right = 0;
  if ( cell > 0 )
    left = bit( cell - 1 );
  else if ( boundary == Boundary::Periodic )
    left = bit( n - 1 );
  if ( cell + 1 < n )
    right = bit( cell + 1 );
  else if ( boundary == Boundary::Periodic )
    right = bit( 0 );
  return 4u * left + 2u * bit( cell ) + right;
}

} // namespace

unsigned neighborhood( const State& s, std::size_t cell, Boundary boundary )
{
  if ( cell >= s.width() )
  {
    throw std::out_of_range( "cell index out of range" );
  }
  return neighborhood_word( s.value(), s.width(), cell, boundary );
}

std::uint64_t step_word( const CaConfig& ca, std::uint64_t s )
{
  const auto n = ca.size();
  std::uint64_t out = 0;
  for ( std::size_t i = 0; i < n; ++i )
  {
    out = ( out << 1 ) | static_cast<std::uint64_t>( ca.rule( i ).output( neighborhood_word( s, n, i, ca.boundary() ) ) );
  }
  return out;
}

State step( const CaConfig& ca, const State& s )
{
  if ( s.width() != ca.size() )
  {
    throw std::invalid_argument( "state has " + std::to_string( s.width() ) + " cells but the CA has " + std::to_string( ca.size() ) );
  }
  return State( s.width(), step_word( ca, s.value() ) );
}

std::span<const std::uint32_t> StdGraph::predecessors( std::uint32_t s ) const
{
  if ( s >= successor_.size() )
  {
    throw std::out_of_range( "state out of range" );
  }
  return std::span<const std::uint32_t>( preds_ ).subspan( pred_offsets_[s], pred_offsets_[s + 1] - pred_offsets_[s] );
}

StdGraph build_std( const CaConfig& ca )
{
  if ( ca.size() > StdGraph::max_cells )
  {
    throw std::invalid_argument( "state transition diagram limited to " + std::to_string( StdGraph::max_cells ) + " cells" );
  }
  StdGraph g;
  g.n_ = ca.size();
  g.boundary_ = ca.boundary();
  const std::uint32_t count = std::uint32_t{ 1 } << g.n_;
  g.successor_.resize( count );

  // Write-disjoint ranges; joining the workers is the synchronization point.
  const auto fill = [&]( std::uint32_t lo, std::uint32_t hi ) {
    for ( auto s = lo; s < hi; ++s )
    {
      g.successor_[s] = static_cast<std::uint32_t>( step_word( ca, s ) );
    }
  };
  const auto workers = std::min<std::uint32_t>( std::max( 1u, std::thread::hardware_concurrency() ), 8u );
  if ( count >= ( 1u << 14 ) && workers > 1 )
  {
    std::vector<std::jthread> pool;
    const auto chunk = count / workers;
    for ( std::uint32_t w = 0; w < workers; ++w )
    {
      const auto lo = w * chunk;
      const auto hi = w + 1 == workers ? count : lo + chunk;
      pool.emplace_back( fill, lo, hi );
    }
  }
  else
  {
    fill( 0, count );
  }

  g.pred_offsets_.assign( count + 1, 0 );
  for ( auto v : g.successor_ )
  {
    ++g.pred_offsets_[v + 1];
  }
  for ( std::uint32_t s = 0; s < count; ++s )
  {
    g.pred_offsets_[s + 1] += g.pred_offsets_[s];
  }
  g.preds_.resize( count );
  {
    auto cursor = g.pred_offsets_;
    for ( std::uint32_t s = 0; s < count; ++s )
    {
      g.preds_[cursor[g.successor_[s]]++] = s;
    }
  }
  for ( std::uint32_t s = 0; s < count; ++s )
  {
    if ( g.pred_offsets_[s + 1] == g.pred_offsets_[s] )
    {
      g.garden_of_eden_.push_back( s );
    }
  }

  // 0 = unvisited, otherwise 1 + index of the walk that first reached the node
  std::vector<std::uint32_t> walk( count, 0 );
  for ( std::uint32_t start = 0; start < count; ++start )
  {
    if ( walk[start] != 0 )
    {
      continue;
    }
    const auto id = start + 1;
    auto s = start;
    while ( walk[s] == 0 )
    {
      walk[s] = id;
      s = g.successor_[s];
    }
    if ( walk[s] != id )
    {
      continue; // ran into an earlier walk
    }
    std::vector<std::uint32_t> cycle{ s };
    for ( auto t = g.successor_[s]; t != s; t = g.successor_[t] )
    {
      cycle.push_back( t );
    }
    std::rotate( cycle.begin(), std::min_element( cycle.begin(), cycle.end() ), cycle.end() );
    g.cycles_.push_back( std::move( cycle ) );
  }
  std::sort( g.cycles_.begin(), g.cycles_.end(), []( const auto& a, const auto& b ) { return a.front() < b.front(); } );
  return g;
}

StdStats std_stats( const StdGraph& g )
{
  StdStats st;
  st.cycle_count = g.cycles().size();
  for ( const auto& c : g.cycles() )
  {
    st.cycle_lengths.push_back( c.size() );
  }
  std::sort( st.cycle_lengths.begin(), st.cycle_lengths.end() );
  st.garden_of_eden_count = g.garden_of_eden().size();
  for ( std::uint32_t s = 0; s < g.node_count(); ++s )
  {
    st.max_in_degree = std::max( st.max_in_degree, g.in_degree( s ) );
  }
  return st;
}

std::string to_dot( const StdGraph& g )
{
  std::string s = "digraph std {\n";
  for ( std::uint32_t u = 0; u < g.node_count(); ++u )
  {
    s += "  " + std::to_string( u ) + " -> " + std::to_string( g.successor( u ) ) + ";\n";
  }
  s += "}\n";
  return s;
}

std::string to_json( const StdGraph& g )
{
  nlohmann::ordered_json j;
  j["n"] = g.cells();
  j["boundary"] = to_string( g.boundary() );
  j["successor"] = std::vector<std::uint32_t>( g.successors().begin(), g.successors().end() );
  j["cycles"] = g.cycles();
  j["garden_of_eden"] = g.garden_of_eden();
  return j.dump();
}

} // namespace linca
