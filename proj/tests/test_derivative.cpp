#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <linca/derivative.hpp>

using namespace linca;

namespace
{
/// f(nb) xor f(nb with slot v flipped), as a truth table.
Rule finite_difference( Rule f, Var v )
{
  std::uint8_t t = 0;
  for ( unsigned nb = 0; nb < 8; ++nb )
  {
    if ( f.output( nb ) != f.output( nb ^ static_cast<unsigned>( v ) ) )
    {
      t |= static_cast<std::uint8_t>( 1u << nb );
    }
  }
  return Rule::from_truth_table( t );
}

Gf2Matrix rows( const char* text ) { return Gf2Matrix::parse( text ); }
} // namespace

TEST_CASE( "derivative examples" )
{
  CHECK( derivative( Rule( 150 ), Var::X ).id() == 255 );
  CHECK( derivative( Rule( 170 ), Var::X ).id() == 0 );
  CHECK( derivative( Rule( 30 ), Var::Y ).id() == 85 );
  CHECK( derivative( Rule( 30 ), Var::Y ).anf_string() == "z⊕1" );
}

TEST_CASE( "derivative agrees with finite differences" )
{
  for ( int id = 0; id < 256; ++id )
  {
    for ( auto v : { Var::X, Var::Y, Var::Z } )
    {
      const auto d = derivative( Rule( id ), v );
      CHECK( d == finite_difference( Rule( id ), v ) );
      CHECK( derivative( d, v ).id() == 0 );
      CHECK( derivative( complement( Rule( id ) ), v ) == d );
    }
  }
}

TEST_CASE( "restrict" )
{
  CHECK( restrict( Rule( 90 ), Var::X, false ).id() == 170 );
  CHECK( restrict( Rule( 150 ), Var::Z, true ) == complement( Rule( 60 ) ) );
  for ( int id = 0; id < 256; ++id )
  {
    for ( auto v : { Var::X, Var::Y, Var::Z } )
    {
      CHECK( derivative( restrict( Rule( id ), v, false ), v ).id() == 0 );
    }
  }
}

TEST_CASE( "constant jacobians of linear rules" )
{
  CHECK( *constant_jacobian( CaConfig::uniform( Rule( 90 ), 4, Boundary::Null ) ) == rows( "0100\n1010\n0101\n0010" ) );
  CHECK( *constant_jacobian( CaConfig::uniform( Rule( 60 ), 4, Boundary::Null ) ) == rows( "1000\n1100\n0110\n0011" ) );
  CHECK( *constant_jacobian( CaConfig::uniform( Rule( 150 ), 4, Boundary::Periodic ) ) == rows( "1101\n1110\n0111\n1011" ) );
  CHECK( *constant_jacobian( CaConfig::uniform( Rule( 0 ), 5, Boundary::Null ) ) == Gf2Matrix::zero( 5 ) );
  CHECK( *constant_jacobian( CaConfig::uniform( Rule( 204 ), 5, Boundary::Null ) ) == Gf2Matrix::identity( 5 ) );
  CHECK_FALSE( constant_jacobian( CaConfig::uniform( Rule( 30 ), 4, Boundary::Periodic ) ).has_value() );
}

TEST_CASE( "jacobian is constant exactly for affine rules" )
{
  for ( int id = 0; id < 256; ++id )
  {
    for ( auto b : { Boundary::Null, Boundary::Periodic } )
    {
      for ( std::size_t n = 4; n <= 6; ++n )
      {
        CHECK( constant_jacobian( CaConfig::uniform( Rule( id ), n, b ) ).has_value() == is_affine( Rule( id ) ) );
      }
    }
  }
}

TEST_CASE( "complementary rules share a jacobian" )
{
  CHECK( jacobian( CaConfig::uniform( Rule( 30 ), 4, Boundary::Periodic ) ) == jacobian( CaConfig::uniform( Rule( 225 ), 4, Boundary::Periodic ) ) );
  const CaConfig a( { Rule( 225 ), Rule( 30 ), Rule( 30 ), Rule( 225 ) }, Boundary::Periodic );
  const auto ja = jacobian( a );
  CHECK( ja == jacobian( CaConfig::uniform( Rule( 30 ), 4, Boundary::Periodic ) ) );
  CHECK( ja.to_text() == jacobian( CaConfig::uniform( Rule( 225 ), 4, Boundary::Periodic ) ).to_text() );
  CHECK_FALSE( ja.is_constant() );
}

TEST_CASE( "jacobian support is tridiagonal" )
{
  for ( int id = 0; id < 256; id += 3 )
  {
    const auto nb = jacobian( CaConfig::uniform( Rule( id ), 6, Boundary::Null ) );
    const auto pb = jacobian( CaConfig::uniform( Rule( id ), 6, Boundary::Periodic ) );
    for ( std::size_t i = 0; i < 6; ++i )
    {
      for ( std::size_t j = 0; j < 6; ++j )
      {
        const auto d = i > j ? i - j : j - i;
        if ( d > 1 )
        {
          CHECK( nb.entry( i, j ).id() == 0 );
        }
        if ( d > 1 && d < 5 )
        {
          CHECK( pb.entry( i, j ).id() == 0 );
        }
      }
    }
  }
}

TEST_CASE( "evaluated jacobian matches state differences" )
{
  // d f_i / d x_j at s equals step(s) xor step(s with x_j flipped) in cell i
  for ( int id = 0; id < 256; id += 5 )
  {
    for ( auto b : { Boundary::Null, Boundary::Periodic } )
    {
      const auto ca = CaConfig::uniform( Rule( id ), 5, b );
      const auto j = jacobian( ca );
      for ( std::uint64_t v = 0; v < 32; ++v )
      {
        const State s( 5, v );
        const auto m = evaluate( j, s );
        for ( std::size_t col = 0; col < 5; ++col )
        {
          const auto diff = step( ca, s ) ^ step( ca, s.flipped( col ) );
          for ( std::size_t row = 0; row < 5; ++row )
          {
            REQUIRE( m.at( row, col ) == diff.get( row ) );
          }
        }
      }
    }
  }
}
