#include <linca/verify.hpp>

#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <linca/ca.hpp>
#include <linca/derivative.hpp>
#include <linca/deviant.hpp>
#include <linca/gf2.hpp>
#include <linca/rule.hpp>
#include <linca/window.hpp>

namespace linca::verify
{

namespace
{

/* Oracles below work on raw integers and truth tables so that they do not
   share code paths with the library routines they check. */

int popcount8( unsigned v )
{
  return std::popcount( v & 0xffu );
}

/// Evaluates an ANF coefficient mask at a neighborhood, straight from the monomial definition.
bool eval_anf( unsigned anf, unsigned nb )
{
  bool v = false;
  for ( unsigned m = 0; m < 8; ++m )
  {
    if ( ( ( anf >> m ) & 1u ) && ( nb & m ) == m )
    {
      v = !v;
    }
  }
  return v;
}

unsigned anf_to_table( unsigned anf )
{
  unsigned t = 0;
  for ( unsigned nb = 0; nb < 8; ++nb )
  {
    t |= static_cast<unsigned>( eval_anf( anf, nb ) ) << nb;
  }
  return t;
}

/// Affine truth tables enumerated from ANF masks with degree <= 1.
std::set<unsigned> affine_tables()
{
  std::set<unsigned> out;
  for ( unsigned anf = 0; anf < 256; ++anf )
  {
    if ( ( anf & ~0b0001'0111u ) == 0 )
    {
      out.insert( anf_to_table( anf ) );
    }
  }
  return out;
}

std::set<unsigned> linear_tables()
{
  std::set<unsigned> out;
  for ( unsigned anf = 0; anf < 256; ++anf )
  {
    if ( ( anf & ~0b0001'0110u ) == 0 )
    {
      out.insert( anf_to_table( anf ) );
    }
  }
  return out;
}

/// One CA step on a raw word, leftmost cell in the top bit.
std::uint64_t oracle_step( unsigned rule, std::uint64_t s, std::size_t n, bool periodic )
{
  std::uint64_t out = 0;
  for ( std::size_t i = 0; i < n; ++i )
  {
    const auto cell = [&]( std::size_t p ) { return ( s >> ( n - 1 - p ) ) & 1u; };
    const auto l = i > 0 ? cell( i - 1 ) : ( periodic ? cell( n - 1 ) : 0u );
    const auto r = i + 1 < n ? cell( i + 1 ) : ( periodic ? cell( 0 ) : 0u );
    const auto nb = 4u * l + 2u * cell( i ) + r;
    out = ( out << 1 ) | ( ( rule >> nb ) & 1u );
  }
  return out;
}

/// Matrix as a packed word, row i in bits [n*(n-1-i), n*(n-i)).
std::uint64_t oracle_mat_vec( std::uint64_t packed, std::uint64_t x, std::size_t n )
{
  std::uint64_t y = 0;
  const auto row_mask = ( std::uint64_t{ 1 } << n ) - 1u;
  for ( std::size_t i = 0; i < n; ++i )
  {
    const auto row = ( packed >> ( n * ( n - 1 - i ) ) ) & row_mask;
    y = ( y << 1 ) | static_cast<std::uint64_t>( std::popcount( row & x ) & 1 );
  }
  return y;
}

struct Check
{
  bool ok = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect( bool cond, const std::function<std::string()>& what )
  {
    ++checks;
    if ( !cond && ok )
    {
      ok = false;
      first_failure = what();
    }
    else if ( !cond )
    {
      ok = false;
    }
  }

  CriterionResult result( int id, std::string name, const std::string& summary ) const
  {
    return { id, std::move( name ), ok, ok ? summary + " (" + std::to_string( checks ) + " checks)" : "first failure: " + first_failure };
  }
};

CriterionResult complement_distance()
{
  Check c;
  for ( int f = 0; f < 256; ++f )
  {
    for ( int g = 0; g < 256; ++g )
    {
      const auto lhs = hamming( complement( Rule( f ) ), Rule( g ) );
      const auto oracle = popcount8( static_cast<unsigned>( ( 255 - f ) ^ g ) );
      c.expect( lhs == 8 - hamming( Rule( f ), Rule( g ) ) && lhs == oracle,
                [&] { return "f=" + std::to_string( f ) + " g=" + std::to_string( g ); } );
    }
  }
  return c.result( 1, "complement-distance", "H(~f,g) = 8 - H(f,g) for all 65536 pairs" );
}

CriterionResult nonlinearity_bound()
{
  Check c;
  const auto affine = affine_tables();
  const auto linear = linear_tables();
  c.expect( affine.size() == 16 && linear.size() == 8, [] { return "affine/linear oracle sizes"; } );
  std::size_t nonlinear = 0;
  for ( int f = 0; f < 256; ++f )
  {
    if ( linear.contains( static_cast<unsigned>( f ) ) )
    {
      continue;
    }
    ++nonlinear;
    int best = 9;
    for ( auto a : affine )
    {
      best = std::min( best, popcount8( static_cast<unsigned>( f ) ^ a ) );
    }
    const auto r = nearest_affine( Rule( f ) );
    c.expect( r.distance == best && r.distance <= 4, [&] { return "rule " + std::to_string( f ) + " distance " + std::to_string( r.distance ); } );
  }
  c.expect( nonlinear == 248, [&] { return "non-linear count " + std::to_string( nonlinear ); } );
  return c.result( 2, "nonlinearity-bound", "all 248 non-linear rules within distance 4 of an affine rule" );
}

/// Derivative by flipping the variable in the truth table.
unsigned oracle_derivative( unsigned table, unsigned var )
{
  unsigned d = 0;
  for ( unsigned nb = 0; nb < 8; ++nb )
  {
    d |= ( ( ( table >> nb ) ^ ( table >> ( nb ^ var ) ) ) & 1u ) << nb;
  }
  return d;
}

CriterionResult jacobian_complement()
{
  Check c;
  for ( int f = 0; f < 256; ++f )
  {
    for ( auto v : { Var::X, Var::Y, Var::Z } )
    {
      const auto d = derivative( Rule( f ), v );
      c.expect( d == derivative( complement( Rule( f ) ), v ) &&
                    static_cast<unsigned>( d.id() ) == oracle_derivative( static_cast<unsigned>( f ), static_cast<unsigned>( v ) ),
                [&] { return "derivative of rule " + std::to_string( f ); } );
    }
  }
  for ( auto b : { Boundary::Null, Boundary::Periodic } )
  {
    std::map<Jacobian, std::set<int>> classes;
    for ( int f = 0; f < 256; ++f )
    {
      classes[jacobian( CaConfig::uniform( Rule( f ), 4, b ) )].insert( f );
    }
    c.expect( classes.size() == 128, [&] { return std::to_string( classes.size() ) + " distinct Jacobians for " + std::string( to_string( b ) ); } );
    for ( const auto& [j, members] : classes )
    {
      const auto f = *members.begin();
      c.expect( members == std::set<int>{ f, 255 - f }, [&] { return "Jacobian class of rule " + std::to_string( f ) + " is not {f, ~f}"; } );
    }
  }
  const auto hybrid = jacobian( CaConfig( { Rule( 225 ), Rule( 30 ), Rule( 30 ), Rule( 225 ) }, Boundary::Periodic ) );
  c.expect( hybrid == jacobian( CaConfig::uniform( Rule( 30 ), 4, Boundary::Periodic ) ),
            [] { return "<225,30,30,225>PB differs from <30,30,30,30>PB"; } );
  c.expect( jacobian( CaConfig::uniform( Rule( 225 ), 4, Boundary::Periodic ) ) == jacobian( CaConfig::uniform( Rule( 30 ), 4, Boundary::Periodic ) ),
            [] { return "J_30|PB != J_225|PB"; } );
  return c.result( 3, "jacobian-complement", "complement-invariant derivatives, 128 Jacobians per boundary, hybrid match" );
}

CriterionResult linear_handle()
{
  Check c;
  const auto linear = linear_tables();
  for ( auto rule : linear )
  {
    for ( auto b : { Boundary::Null, Boundary::Periodic } )
    {
      for ( std::size_t n = 4; n <= 10; ++n )
      {
        const auto ca = CaConfig::uniform( Rule( static_cast<int>( rule ) ), n, b );
        const auto j = constant_jacobian( ca );
        c.expect( j.has_value(), [&] { return "no constant Jacobian for linear rule " + std::to_string( rule ); } );
        if ( !j )
        {
          continue;
        }
        for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << n ); ++s )
        {
          const auto via_matrix = mat_vec_mul( *j, State( n, s ) ).value();
          c.expect( via_matrix == oracle_step( rule, s, n, b == Boundary::Periodic ),
                    [&] { return "rule " + std::to_string( rule ) + " n=" + std::to_string( n ) + " state " + std::to_string( s ); } );
        }
      }
    }
  }
  const auto affine = affine_tables();
  for ( auto b : { Boundary::Null, Boundary::Periodic } )
  {
    std::size_t present = 0;
    for ( int f = 0; f < 256; ++f )
    {
      const bool has = constant_jacobian( CaConfig::uniform( Rule( f ), 4, b ) ).has_value();
      present += has;
      c.expect( has == affine.contains( static_cast<unsigned>( f ) ), [&] { return "constant Jacobian mismatch for rule " + std::to_string( f ); } );
    }
    c.expect( present == 16, [&] { return std::to_string( present ) + " constant Jacobians"; } );
  }
  return c.result( 4, "linear-handle", "step = J*s for all linear rules, n=4..10, both boundaries" );
}

CriterionResult deviant_example()
{
  Check c;
  const auto r = analyze( Rule( 218 ), 4, Boundary::Null );
  c.expect( r.linear_rule == Rule( 90 ), [&] { return "nearest linear " + std::to_string( r.linear_rule.id() ); } );
  c.expect( r.patterns == std::vector<unsigned>{ 7 }, [] { return "patterns != {111}"; } );
  std::vector<std::uint64_t> dev;
  for ( const auto& s : r.deviant_states )
  {
    dev.push_back( s.value() );
  }
  c.expect( dev == std::vector<std::uint64_t>{ 7, 14, 15 }, [] { return "deviant states != {7,14,15}"; } );
  c.expect( r.ratio_string() == "3/16", [&] { return "ratio " + r.ratio_string(); } );
  std::size_t non_deviant = 0;
  for ( std::uint64_t s = 0; s < 16; ++s )
  {
    const auto expected = oracle_step( 218, s, 4, false );
    if ( r.is_deviant( State( 4, s ) ) )
    {
      c.expect( mat_vec_mul( r.matrices.at( s ), State( 4, s ) ).value() == expected, [&] { return "M_u fails at " + std::to_string( s ); } );
    }
    else
    {
      ++non_deviant;
      c.expect( mat_vec_mul( r.base_matrix, State( 4, s ) ).value() == expected, [&] { return "base fails at " + std::to_string( s ); } );
    }
  }
  c.expect( non_deviant == 13, [&] { return std::to_string( non_deviant ) + " non-deviant states"; } );
  return c.result( 5, "deviant-example", "rule 218 vs 90, n=4 NB: deviant {7,14,15}, ratio 3/16" );
}

CriterionResult deviant_sweep()
{
  Check c;
  const auto linear = linear_tables();
  for ( int g = 0; g < 256; ++g )
  {
    if ( linear.contains( static_cast<unsigned>( g ) ) )
    {
      continue;
    }
    for ( std::size_t n = 4; n <= 6; ++n )
    {
      for ( auto b : { Boundary::Null, Boundary::Periodic } )
      {
        const auto r = analyze( Rule( g ), n, b );
        const auto tag = [&] { return "rule " + std::to_string( g ) + " n=" + std::to_string( n ) + " " + std::string( to_string( b ) ); };
        for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << n ); ++s )
        {
          const State u( n, s );
          const auto expected = oracle_step( static_cast<unsigned>( g ), s, n, b == Boundary::Periodic );
          if ( !r.is_deviant( u ) )
          {
            c.expect( mat_vec_mul( r.base_matrix, u ).value() == expected, [&] { return tag() + " base at " + std::to_string( s ); } );
          }
          else if ( s == 0 )
          {
            c.expect( r.zero_state_complement && ( ~mat_vec_mul( r.base_matrix, u ) ).value() == expected,
                      [&] { return tag() + " zero state"; } );
          }
          else
          {
            c.expect( mat_vec_mul( r.matrices.at( s ), u ).value() == expected, [&] { return tag() + " M_u at " + std::to_string( s ); } );
          }
        }
      }
    }
  }
  return c.result( 6, "deviant-sweep", "product contracts for 248 rules, n=4..6, both boundaries" );
}

CriterionResult zero_window()
{
  Check c;
  std::size_t none = 0;
  const auto zero = Window::from_value( 0 );
  for ( int f = 0; f < 256; ++f )
  {
    const auto count = count_matrices( Rule( f ), zero );
    const bool odd = f % 2 == 1;
    none += count == 0;
    c.expect( ( count == 0 ) == odd, [&] { return "rule " + std::to_string( f ) + " count " + std::to_string( count ); } );
    if ( odd )
    {
      const auto& table = matrix_table( Rule( f ) );
      c.expect( table.zero_window_mode == ZeroWindowMode::Complement && table.apply( zero ).value() == 0b1111u,
                [&] { return "complement mode for rule " + std::to_string( f ); } );
    }
  }
  c.expect( none == 128, [&] { return std::to_string( none ) + " rules without a zero-window matrix"; } );
  return c.result( 7, "zero-window", "exactly the 128 odd rules lack a matrix for 0000; complement gives 1111" );
}

CriterionResult matrix_count()
{
  Check c;
  // brute force over all 2^16 4x4 matrices, once per distinct (window, output) pair
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> brute;
  for ( int f = 0; f < 256; ++f )
  {
    for ( unsigned w = 1; w < 16; ++w )
    {
      const auto out = static_cast<unsigned>( oracle_step( static_cast<unsigned>( f ), w, 4, true ) );
      auto [it, inserted] = brute.try_emplace( { w, out }, 0 );
      if ( inserted )
      {
        for ( std::uint64_t m = 0; m < ( 1u << 16 ); ++m )
        {
          it->second += oracle_mat_vec( m, w, 4 ) == out;
        }
      }
      const auto algebraic = count_matrices( Rule( f ), Window::from_value( w ) );
      c.expect( algebraic == 4096 && it->second == 4096,
                [&] { return "rule " + std::to_string( f ) + " window " + std::to_string( w ) + ": " + std::to_string( algebraic ); } );
    }
  }
  for ( unsigned x = 1; x < 4; ++x )
  {
    for ( unsigned y = 0; y < 4; ++y )
    {
      std::uint64_t n = 0;
      for ( std::uint64_t m = 0; m < 16; ++m )
      {
        n += oracle_mat_vec( m, x, 2 ) == y;
      }
      c.expect( n == 4 && count_matrices( BitVector( 2, x ), BitVector( 2, y ) ) == 4, [&] { return "2-bit input " + std::to_string( x ); } );
    }
  }
  return c.result( 8, "matrix-count", std::to_string( brute.size() ) + " (window, output) pairs brute-forced to 4096; 2-bit analogue 4" );
}

CriterionResult windowed_evolution()
{
  Check c;
  for ( int f = 0; f < 256; ++f )
  {
    const auto& table = matrix_table( Rule( f ) );
    for ( std::size_t n : { 4u, 6u, 8u } )
    {
      for ( std::uint64_t s = 0; s < ( std::uint64_t{ 1 } << n ); ++s )
      {
        c.expect( evolve_windowed( table, State( n, s ) ).value() == oracle_step( static_cast<unsigned>( f ), s, n, true ),
                  [&] { return "rule " + std::to_string( f ) + " n=" + std::to_string( n ) + " state " + std::to_string( s ); } );
      }
    }
  }
  const auto input = State::parse( "10101011" );
  const auto trace = evolve_windowed_trace( matrix_table( Rule( 128 ) ), input );
  const std::vector<std::string> windows{ "1101", "0101", "0101", "0111" };
  const std::vector<std::string> products{ "1000", "0000", "0000", "0010" };
  c.expect( trace.size() == 4, [] { return "trace length"; } );
  for ( std::size_t i = 0; i < trace.size() && i < 4; ++i )
  {
    c.expect( trace[i].window.bits().to_string() == windows[i] && trace[i].product.to_string() == products[i],
              [&] { return "block " + std::to_string( i ) + ": " + trace[i].window.bits().to_string() + " -> " + trace[i].product.to_string(); } );
  }
  c.expect( evolve_windowed( Rule( 128 ), input ).to_string() == "00000001", [] { return "10101011 under rule 128"; } );
  return c.result( 9, "windowed-evolution", "windowed step = periodic step for 256 rules, n in {4,6,8}" );
}

/// True when some choice of k first rows r (one per matrix) satisfies
/// parity(r & w) == out_w bit 0 for every nonzero window w; a necessary
/// condition for k matrices to cover the rule.
bool first_rows_can_cover( unsigned rule, std::size_t k )
{
  const auto total = std::size_t{ 1 } << ( 4 * k );
  for ( std::size_t code = 0; code < total; ++code )
  {
    bool all = true;
    for ( unsigned w = 1; w < 16 && all; ++w )
    {
      const bool want = ( oracle_step( rule, w, 4, true ) >> 3 ) & 1u;
      bool hit = false;
      for ( std::size_t i = 0; i < k && !hit; ++i )
      {
        const auto r = static_cast<unsigned>( ( code >> ( 4 * i ) ) & 0xfu );
        hit = ( popcount8( r & w ) % 2 == 1 ) == want;
      }
      all = hit;
    }
    if ( all )
    {
      return true;
    }
  }
  return false;
}

CriterionResult minimal_sets()
{
  Check c;
  const std::map<int, std::size_t> bound{ { 240, 1 }, { 204, 1 }, { 170, 1 }, { 128, 3 }, { 160, 3 }, { 255, 3 }, { 192, 4 }, { 136, 4 } };
  std::string sizes;
  for ( const auto& [id, limit] : bound )
  {
    const auto set = minimal_matrix_set( Rule( id ) );
    sizes += " " + std::to_string( id ) + ":" + std::to_string( set.members.size() );
    if ( limit == 1 )
    {
      c.expect( set.members.size() == 1, [&] { return "rule " + std::to_string( id ) + " needs " + std::to_string( set.members.size() ); } );
    }
    else
    {
      c.expect( set.members.size() <= limit, [&] {
        auto msg = "rule " + std::to_string( id ) + " needs " + std::to_string( set.members.size() ) + " > " + std::to_string( limit );
        if ( !first_rows_can_cover( static_cast<unsigned>( id ), limit ) )
        {
          msg += "; brute force: no " + std::to_string( limit ) + " first rows cover all nonzero windows";
        }
        return msg;
      } );
    }
    for ( unsigned w = 0; w < 16; ++w )
    {
      const auto expected = oracle_step( static_cast<unsigned>( id ), w, 4, true );
      c.expect( set.apply( Window::from_value( w ) ).value() == expected, [&] { return "rule " + std::to_string( id ) + " window " + std::to_string( w ); } );
    }
  }
  c.expect( minimal_matrix_set( Rule( 204 ) ).members.front() == Gf2Matrix::identity( 4 ), [] { return "rule 204 set is not {I}"; } );
  for ( int f = 0; f < 256; ++f )
  {
    for ( unsigned w = 0; w < 16; ++w )
    {
      if ( w == 0 && f % 2 == 1 )
      {
        continue;
      }
      const auto m = canonical_matrix( Rule( f ), Window::from_value( w ) );
      c.expect( m.distinct_rows() <= 2 && mat_vec_mul( m, BitVector( 4, w ) ).value() == oracle_step( static_cast<unsigned>( f ), w, 4, true ),
                [&] { return "canonical matrix rule " + std::to_string( f ) + " window " + std::to_string( w ); } );
    }
  }
  return c.result( 10, "minimal-sets", "fundamental rule set sizes" + sizes );
}

CriterionResult window_table()
{
  Check c;
  // input -> output rows of the rule-192 table
  const std::vector<std::pair<std::string, std::string>> rows{
      { "0000", "0000" }, { "0001", "0000" }, { "0010", "0000" }, { "0011", "0001" }, { "0100", "0000" }, { "0101", "0000" },
      { "0110", "0010" }, { "0111", "0011" }, { "1000", "0000" }, { "1001", "1000" }, { "1010", "0000" }, { "1011", "1001" },
      { "1100", "0100" }, { "1101", "1100" }, { "1110", "0110" }, { "1111", "1111" } };
  for ( const auto& [in, out] : rows )
  {
    const auto got = window_output( Rule( 192 ), Window( BitVector::parse( in ) ) ).to_string();
    c.expect( got == out, [&] { return in + " -> " + got + ", expected " + out; } );
  }
  return c.result( 11, "window-table", "rule 192 window outputs match all 16 table rows" );
}

using Suite = CriterionResult ( * )();

const std::vector<std::pair<std::string, Suite>>& registry()
{
  static const std::vector<std::pair<std::string, Suite>> r{
      { "complement-distance", complement_distance },
      { "nonlinearity-bound", nonlinearity_bound },
      { "jacobian-complement", jacobian_complement },
      { "linear-handle", linear_handle },
      { "deviant-example", deviant_example },
      { "deviant-sweep", deviant_sweep },
      { "zero-window", zero_window },
      { "matrix-count", matrix_count },
      { "windowed-evolution", windowed_evolution },
      { "minimal-sets", minimal_sets },
      { "window-table", window_table } };
  return r;
}

CriterionResult run_guarded( int id, const std::string& name, Suite suite )
{
  try
  {
    return suite();
  }
  catch ( const std::exception& e )
  {
    return { id, name, false, std::string( "exception: " ) + e.what() };
  }
}

} // namespace

std::vector<std::string> suite_names()
{
  std::vector<std::string> names;
  for ( const auto& [name, suite] : registry() )
  {
    names.push_back( name );
  }
  return names;
}

std::vector<CriterionResult> run_suite( std::string_view name )
{
  std::vector<CriterionResult> out;
  int id = 0;
  for ( const auto& [suite_name, suite] : registry() )
  {
    ++id;
    if ( name == "all" || name == suite_name )
    {
      out.push_back( run_guarded( id, suite_name, suite ) );
    }
  }
  if ( out.empty() )
  {
    throw std::invalid_argument( "unknown suite '" + std::string( name ) + "'" );
  }
  return out;
}

} // namespace linca::verify
