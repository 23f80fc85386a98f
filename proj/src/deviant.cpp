#include <linca/deviant.hpp>

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include <linca/derivative.hpp>

namespace linca
{

std::vector<unsigned> mismatch_patterns( Rule g, Rule f )
{
  std::vector<unsigned> out;
  for ( unsigned p = 0; p < 8; ++p )
  {
    if ( g.output( p ) != f.output( p ) )
    {
      out.push_back( p );
    }
  }
  return out;
}

bool contains_pattern( const State& s, const std::vector<unsigned>& patterns, Boundary boundary )
{
  for ( std::size_t i = 0; i < s.width(); ++i )
  {
    if ( std::find( patterns.begin(), patterns.end(), neighborhood( s, i, boundary ) ) != patterns.end() )
    {
      return true;
    }
  }
  return false;
}

std::vector<State> deviant_states( Rule g, Rule f, std::size_t n, Boundary boundary )
{
  if ( n < CaConfig::min_cells || n > StdGraph::max_cells )
  {
    throw std::invalid_argument( "deviant state scan needs 3..20 cells" );
  }
  const auto patterns = mismatch_patterns( g, f );
  std::vector<State> out;
  if ( patterns.empty() )
  {
    return out;
  }
  for ( std::uint64_t v = 0; v < ( std::uint64_t{ 1 } << n ); ++v )
  {
    const State s( n, v );
    if ( contains_pattern( s, patterns, boundary ) )
    {
      out.push_back( s );
    }
  }
  return out;
}

State corrected_successor( const State& u, Rule g, Rule f, Boundary boundary )
{
  const auto patterns = mismatch_patterns( g, f );
  auto v = step( CaConfig::uniform( f, u.width(), boundary ), u );
  for ( std::size_t i = 0; i < u.width(); ++i )
  {
    if ( std::find( patterns.begin(), patterns.end(), neighborhood( u, i, boundary ) ) != patterns.end() )
    {
      v = v.flipped( i );
    }
  }
  return v;
}

Gf2Matrix deviant_matrix( const Gf2Matrix& base, const State& u, const State& v_target )
{
  if ( base.size() != u.width() || u.width() != v_target.width() )
  {
    throw std::invalid_argument( "deviant_matrix: dimension mismatch" );
  }
  const auto pivot = u.first_set();
  auto m = base;
  for ( std::size_t i = 0; i < base.size(); ++i )
  {
    if ( dot( base.row( i ), u ) == v_target.get( i ) )
    {
      continue;
    }
    if ( !pivot )
    {
      throw NoMatrixError( "no matrix maps the zero state to " + v_target.to_string() );
    }
    m = m.with_row( i, base.row( i ).flipped( *pivot ) );
  }
  return m;
}

std::string DeviantReport::ratio_string() const
{
  return std::to_string( deviant_count() ) + "/" + std::to_string( state_count() );
}

bool DeviantReport::is_deviant( const State& s ) const
{
  return std::binary_search( deviant_states.begin(), deviant_states.end(), s );
}

DeviantReport analyze( Rule g, std::size_t n, Boundary boundary )
{
  const auto nearest = nearest_linear( g );
  DeviantReport r;
  r.nonlinear_rule = g;
  r.linear_rule = nearest.first();
  r.linear_witnesses = nearest.witnesses;
  r.patterns = mismatch_patterns( g, r.linear_rule );
  r.n = n;
  r.boundary = boundary;
  r.deviant_states = deviant_states( g, r.linear_rule, n, boundary );

  const auto base = constant_jacobian( CaConfig::uniform( r.linear_rule, n, boundary ) );
  if ( !base )
  {
    throw std::logic_error( "linear rule without a constant Jacobian" );
  }
  r.base_matrix = *base;

  const auto ca = CaConfig::uniform( g, n, boundary );
  for ( const auto& u : r.deviant_states )
  {
    if ( u.is_zero() )
    {
      r.zero_state_complement = true;
      continue;
    }
    const auto target = corrected_successor( u, g, r.linear_rule, boundary );
    r.matrices.emplace( u.value(), deviant_matrix( r.base_matrix, u, target ) );
  }
  return r;
}

std::string to_json( const DeviantReport& report )
{
  nlohmann::ordered_json j;
  j["rule"] = report.nonlinear_rule.id();
  j["nearest_linear"] = report.linear_rule.id();
  std::vector<int> witnesses;
  for ( auto w : report.linear_witnesses )
  {
    witnesses.push_back( w.id() );
  }
  j["nearest_linear_witnesses"] = witnesses;
  std::vector<std::string> patterns;
  for ( auto p : report.patterns )
  {
    patterns.push_back( State( 3, p ).to_string() );
  }
  j["patterns"] = patterns;
  j["boundary"] = to_string( report.boundary );
  j["n"] = report.n;
  std::vector<std::uint64_t> deviant;
  for ( const auto& s : report.deviant_states )
  {
    deviant.push_back( s.value() );
  }
  j["deviant"] = deviant;
  j["ratio"] = report.ratio_string();
  j["base_matrix"] = report.base_matrix.to_text();
  auto matrices = nlohmann::ordered_json::object();
  for ( const auto& [state, m] : report.matrices )
  {
    matrices[std::to_string( state )] = m.to_text();
  }
  j["matrices"] = matrices;
  j["complement_zero_state"] = report.zero_state_complement;
  return j.dump();
}

} // namespace linca
