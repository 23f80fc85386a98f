#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <linca/rule.hpp>

using namespace linca;

namespace
{
std::vector<int> ids( const std::vector<Rule>& rs )
{
  std::vector<int> out;
  for ( auto r : rs )
  {
    out.push_back( r.id() );
  }
  return out;
}

std::uint8_t anf_of( std::initializer_list<const char*> terms )
{
  std::uint8_t a = 0;
  for ( auto t : terms )
  {
    for ( unsigned m = 0; m < 8; ++m )
    {
      if ( monomial_name( m ) == t )
      {
        a |= static_cast<std::uint8_t>( 1u << m );
      }
    }
  }
  return a;
}
} // namespace

TEST_CASE( "make_rule" )
{
  const auto r218 = make_rule( 218 );
  const std::vector<bool> column{ 0, 1, 0, 1, 1, 0, 1, 1 }; // inputs 000..111
  for ( unsigned nb = 0; nb < 8; ++nb )
  {
    CHECK( r218.output( nb ) == column[nb] );
  }
  CHECK( r218.binary() == "11011010" );

  CHECK( make_rule( 150 ).anf() == anf_of( { "x", "y", "z" } ) );
  CHECK( make_rule( 150 ).anf_string() == "x⊕y⊕z" );
  CHECK( make_rule( 1 ).anf() == 0xff );
  CHECK( make_rule( 1 ).anf_string() == "xyz⊕xy⊕xz⊕x⊕yz⊕y⊕z⊕1" );
  CHECK( make_rule( 0 ).anf() == 0 );
  CHECK( make_rule( 0 ).anf_string() == "0" );

  CHECK_THROWS_AS( make_rule( 256 ), std::invalid_argument );
  CHECK_THROWS_AS( make_rule( -1 ), std::invalid_argument );
}

TEST_CASE( "ANF round trip and parity" )
{
  for ( int id = 0; id < 256; ++id )
  {
    const Rule r( id );
    CHECK( Rule::from_anf( r.anf() ) == r );
    CHECK( moebius( moebius( r.truth_table() ) ) == r.truth_table() );
    CHECK( r.is_odd() == r.output( 0 ) );
    CHECK( r.is_odd() == r.has_term( 0 ) );
    CHECK( static_cast<int>( r.weight() ) == hamming( r, Rule( 0 ) ) );
  }
}

TEST_CASE( "complement" )
{
  CHECK( complement( Rule( 30 ) ).id() == 225 );
  CHECK( complement( Rule( 60 ) ).id() == 195 );
  for ( int id = 0; id < 256; ++id )
  {
    CHECK( complement( complement( Rule( id ) ) ) == Rule( id ) );
    CHECK( complement( Rule( id ) ).truth_table() == static_cast<std::uint8_t>( ~Rule( id ).truth_table() ) );
  }
}

TEST_CASE( "hamming" )
{
  CHECK( Rule( 34 ).binary() == "00100010" );
  CHECK( Rule( 225 ).binary() == "11100001" );
  CHECK( hamming( Rule( 34 ), Rule( 225 ) ) == 4 );
  CHECK( hamming( Rule( 218 ), Rule( 90 ) ) == 1 );
  for ( int id = 0; id < 256; ++id )
  {
    CHECK( hamming( Rule( id ), Rule( id ) ) == 0 );
  }
}

TEST_CASE( "complement distance identity over all pairs" )
{
  for ( int f = 0; f < 256; ++f )
  {
    for ( int g = 0; g < 256; ++g )
    {
      REQUIRE( hamming( complement( Rule( f ) ), Rule( g ) ) == 8 - hamming( Rule( f ), Rule( g ) ) );
    }
  }
}

TEST_CASE( "linear and affine sets" )
{
  CHECK( ids( linear_rules() ) == std::vector<int>{ 0, 60, 90, 102, 150, 170, 204, 240 } );

  std::vector<int> expected_affine;
  for ( auto id : { 0, 170, 204, 102, 240, 90, 60, 150 } )
  {
    expected_affine.push_back( id );
    expected_affine.push_back( 255 - id );
  }
  std::sort( expected_affine.begin(), expected_affine.end() );
  CHECK( ids( affine_rules() ) == expected_affine );

  CHECK_FALSE( is_affine( Rule( 218 ) ) );
  CHECK( Rule( 218 ).degree() >= 2 );
  CHECK( is_linear( Rule( 90 ) ) );
  CHECK( is_affine( Rule( 165 ) ) );
  CHECK_FALSE( is_linear( Rule( 165 ) ) );

  int linear = 0;
  int affine = 0;
  for ( int id = 0; id < 256; ++id )
  {
    linear += is_linear( Rule( id ) );
    affine += is_affine( Rule( id ) );
    CHECK( is_affine( Rule( id ) ) == ( Rule( id ).degree() <= 1 ) );
  }
  CHECK( linear == 8 );
  CHECK( affine == 16 );
}

TEST_CASE( "nearest affine and linear rules" )
{
  const auto l218 = nearest_linear( Rule( 218 ) );
  CHECK( l218.distance == 1 );
  CHECK( ids( l218.witnesses ) == std::vector<int>{ 90 } );

  const auto a150 = nearest_affine( Rule( 150 ) );
  CHECK( a150.distance == 0 );
  CHECK( ids( a150.witnesses ) == std::vector<int>{ 150 } );

  // exhaustive scan of the 16 affine rules
  const auto a30 = nearest_affine( Rule( 30 ) );
  int best = 9;
  std::vector<int> minimizers;
  for ( auto a : affine_rules() )
  {
    const auto d = __builtin_popcount( static_cast<unsigned>( 30 ^ a.id() ) );
    if ( d < best )
    {
      best = d;
      minimizers.clear();
    }
    if ( d == best )
    {
      minimizers.push_back( a.id() );
    }
  }
  CHECK( a30.distance == best );
  CHECK( a30.distance == 2 );
  CHECK( ids( a30.witnesses ) == minimizers );
  CHECK( ids( a30.witnesses ) == std::vector<int>{ 15, 60, 90, 150 } );
}

TEST_CASE( "every non-linear rule is within distance 4 of an affine rule" )
{
  int nonlinear = 0;
  for ( int id = 0; id < 256; ++id )
  {
    if ( is_linear( Rule( id ) ) )
      continue;
    ++nonlinear;
    CHECK( nearest_affine( Rule( id ) ).distance <= 4 );
  }
  CHECK( nonlinear == 248 );
}

TEST_CASE( "distance partition" )
{
  const std::array<std::size_t, 9> binomial{ 1, 8, 28, 56, 70, 56, 28, 8, 1 };
  for ( int g = 0; g < 256; ++g )
  {
    const auto p = distance_partition( Rule( g ) );
    CHECK( p.sizes() == binomial );
    CHECK( ids( p.classes[0] ) == std::vector<int>{ g } );
    for ( int m = 0; m <= 8; ++m )
    {
      for ( auto r : p.classes[static_cast<std::size_t>( m )] )
      {
        CHECK( p.class_of( complement( r ) ) == 8 - m );
      }
    }
  }
}

TEST_CASE( "two-variable distance classes by enumeration" )
{
  // the 16 two-variable functions as 4-bit truth tables, reference "1011"
  const unsigned reference = 0b1011;
  std::array<int, 5> sizes{};
  for ( unsigned f = 0; f < 16; ++f )
  {
    ++sizes[static_cast<std::size_t>( __builtin_popcount( f ^ reference ) )];
  }
  CHECK( sizes == std::array<int, 5>{ 1, 4, 6, 4, 1 } );
}
