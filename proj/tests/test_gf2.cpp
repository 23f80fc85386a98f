#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include <linca/gf2.hpp>

using namespace linca;

namespace
{

/// Every row r of the given width satisfying all constraints, by enumeration.
std::vector<BitVector> enumerate_rows( std::size_t width, const std::vector<RowConstraint>& cs )
{
  std::vector<BitVector> out;
  for ( std::uint64_t v = 0; v < ( std::uint64_t{ 1 } << width ); ++v )
  {
    const BitVector r( width, v );
    bool ok = true;
    for ( const auto& c : cs )
    {
      ok = ok && ( ( r & c.input ).weight() % 2 == 1 ) == c.target;
    }
    if ( ok )
    {
      out.push_back( r );
    }
  }
  return out;
}

std::size_t image_size( const Gf2Matrix& m )
{
  std::set<std::uint64_t> img;
  for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << m.size() ); ++x )
  {
    img.insert( mat_vec_mul( m, BitVector( m.size(), x ) ).value() );
  }
  return img.size();
}

Gf2Matrix random_matrix( std::mt19937_64& rng, std::size_t n )
{
  std::vector<BitVector> rows;
  for ( std::size_t i = 0; i < n; ++i )
  {
    rows.emplace_back( n, rng() & ( ( std::uint64_t{ 1 } << n ) - 1 ) );
  }
  return Gf2Matrix( rows );
}

} // namespace

TEST_CASE( "bit vectors use the leftmost cell as most significant bit" )
{
  const auto v = BitVector::parse( "1011" );
  CHECK( v.value() == 11 );
  CHECK( v.get( 0 ) );
  CHECK_FALSE( v.get( 1 ) );
  CHECK( v.to_string() == "1011" );
  CHECK( v.first_set() == 0u );
  CHECK( BitVector::parse( "0010" ).first_set() == 2u );
  CHECK_FALSE( BitVector::zeros( 5 ).first_set().has_value() );
  CHECK( ( ~v ).to_string() == "0100" );
  CHECK_THROWS_AS( BitVector::parse( "10a1" ), std::invalid_argument );
  CHECK_THROWS_AS( BitVector::parse( "" ), std::invalid_argument );
  CHECK_THROWS_AS( BitVector( 3, 8 ), std::invalid_argument );
  CHECK_THROWS_AS( v ^ BitVector::zeros( 3 ), std::invalid_argument );
}

TEST_CASE( "mat_vec_mul" )
{
  const auto m = Gf2Matrix::parse( "1101\n1110\n0111\n1011" );
  CHECK( mat_vec_mul( m, BitVector::parse( "1101" ) ).to_string() == "1000" );

  for ( std::uint64_t v = 0; v < 16; ++v )
  {
    CHECK( mat_vec_mul( Gf2Matrix::identity( 4 ), BitVector( 4, v ) ).value() == v );
  }
  CHECK( mat_vec_mul( Gf2Matrix::zero( 4 ), BitVector::parse( "1111" ) ).to_string() == "0000" );
  CHECK_THROWS_AS( mat_vec_mul( m, BitVector::parse( "101" ) ), std::invalid_argument );
}

TEST_CASE( "matrix text format" )
{
  const std::string text = "1101\n1110\n0111\n1011";
  CHECK( Gf2Matrix::parse( text ).to_text() == text );
  CHECK( Gf2Matrix::parse( "10\r\n01\n" ) == Gf2Matrix::identity( 2 ) );
  CHECK_THROWS_AS( Gf2Matrix::parse( "110\n011" ), std::invalid_argument );
}

TEST_CASE( "solve_row examples" )
{
  SUBCASE( "single odd-overlap constraint" )
  {
    const std::vector<RowConstraint> cs{ { BitVector::parse( "0111" ), true } };
    const auto sol = solve_row( 4, cs );
    CHECK( sol.count() == 8 );
    CHECK( sol.members == enumerate_rows( 4, cs ) );
    CHECK( std::find( sol.members.begin(), sol.members.end(), BitVector::parse( "0001" ) ) != sol.members.end() );
    CHECK( sol.canonical()->to_string() == "0001" );
  }
  SUBCASE( "two unit constraints" )
  {
    const std::vector<RowConstraint> cs{ { BitVector::parse( "1000" ), false }, { BitVector::parse( "0100" ), true } };
    const auto sol = solve_row( 4, cs );
    REQUIRE( sol.members.size() == 4 );
    CHECK( sol.members == enumerate_rows( 4, cs ) );
    for ( const auto& r : sol.members )
    {
      CHECK_FALSE( r.get( 0 ) );
      CHECK( r.get( 1 ) );
    }
  }
  SUBCASE( "zero input cannot produce 1" )
  {
    const std::vector<RowConstraint> cs{ { BitVector::parse( "0000" ), true } };
    const auto sol = solve_row( 4, cs );
    CHECK( sol.empty() );
    CHECK( sol.count() == 0 );
    CHECK( sol.members.empty() );
  }
}

TEST_CASE( "solve_row matches enumeration on random systems" )
{
  std::mt19937_64 rng( 7 );
  for ( int trial = 0; trial < 2000; ++trial )
  {
    const std::size_t width = 1 + rng() % 4;
    std::vector<RowConstraint> cs;
    const auto k = rng() % 6;
    for ( std::size_t i = 0; i < k; ++i )
    {
      cs.push_back( { BitVector( width, rng() & ( ( 1u << width ) - 1 ) ), static_cast<bool>( rng() & 1 ) } );
    }
    const auto sol = solve_row( width, cs );
    const auto expected = enumerate_rows( width, cs );
    CHECK( sol.members == expected );
    CHECK( sol.count() == expected.size() );
    CHECK( row_system_consistent( width, cs ) == !expected.empty() );

    // 2^(width - rank) or 0
    if ( !expected.empty() )
    {
      std::vector<BitVector> rows;
      for ( const auto& c : cs )
      {
        rows.push_back( c.input );
      }
      while ( rows.size() < width )
      {
        rows.push_back( BitVector::zeros( width ) );
      }
      if ( rows.size() == width )
      {
        CHECK( expected.size() == ( std::size_t{ 1 } << ( width - rank( Gf2Matrix( rows ) ) ) ) );
      }
    }
  }
}

TEST_CASE( "solve_row beyond the enumeration limit returns the smallest solution" )
{
  const std::vector<RowConstraint> cs{ { BitVector::parse( "1100000000" ), true }, { BitVector::parse( "0000000011" ), false } };
  const auto sol = solve_row( 10, cs );
  REQUIRE( sol.consistent );
  CHECK( sol.free_dims == 8 );
  CHECK( sol.count() == 256 );
  REQUIRE( sol.members.size() == 1 );
  CHECK( sol.members.front() == enumerate_rows( 10, cs ).front() );
}

TEST_CASE( "rank" )
{
  CHECK( rank( Gf2Matrix::identity( 4 ) ) == 4 );
  CHECK( rank( Gf2Matrix::zero( 4 ) ) == 0 );
  CHECK( nullity( Gf2Matrix::zero( 4 ) ) == 4 );

  const auto m = Gf2Matrix::parse( "0100\n1010\n0101\n0010" );
  CHECK( image_size( m ) == 16 );
  CHECK( rank( m ) == 4 );

  CHECK( rank( Gf2Matrix::parse( "110\n011\n101" ) ) == 2 );
}

TEST_CASE( "properties on random matrices" )
{
  std::mt19937_64 rng( 42 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const std::size_t n = 1 + rng() % 6;
    const auto m = random_matrix( rng, n );
    const auto mask = ( std::uint64_t{ 1 } << n ) - 1;
    const BitVector x( n, rng() & mask );
    const BitVector y( n, rng() & mask );
    CHECK( mat_vec_mul( m, x ^ y ) == ( mat_vec_mul( m, x ) ^ mat_vec_mul( m, y ) ) );
    CHECK( mat_vec_mul( m, BitVector::zeros( n ) ).is_zero() );
    CHECK( image_size( m ) == ( std::size_t{ 1 } << rank( m ) ) );
  }
}
