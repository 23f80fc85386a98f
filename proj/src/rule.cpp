#include <linca/rule.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace linca
{

Rule::Rule( int wolfram_id )
    : id_( wolfram_id )
{
  if ( wolfram_id < 0 || wolfram_id > 255 )
  {
    throw std::invalid_argument( "rule id must be in 0..255, got " + std::to_string( wolfram_id ) );
  }
}

std::uint8_t moebius( std::uint8_t bits )
{
  unsigned v = bits;
  // butterfly over each variable: fold the "variable = 0" half into the "= 1" half
  for ( unsigned var = 1; var < 8; var <<= 1 )
  {
    for ( unsigned i = 0; i < 8; ++i )
    {
      if ( i & var )
      {
        v ^= ( ( v >> ( i ^ var ) ) & 1u ) << i;
      }
    }
  }
  return static_cast<std::uint8_t>( v );
}

Rule Rule::from_anf( std::uint8_t anf )
{
  return from_truth_table( moebius( anf ) );
}

std::uint8_t Rule::anf() const noexcept
{
  return moebius( truth_table() );
}

int Rule::degree() const noexcept
{
  const auto a = anf();
  int d = 0;
  for ( unsigned m = 0; m < 8; ++m )
  {
    if ( ( a >> m ) & 1u )
    {
      d = std::max( d, std::popcount( m ) );
    }
  }
  return d;
}

std::size_t Rule::weight() const noexcept
{
  return static_cast<std::size_t>( std::popcount( truth_table() ) );
}

std::string Rule::binary() const
{
  std::string s( 8, '0' );
  for ( unsigned i = 0; i < 8; ++i )
  {
    if ( output( 7 - i ) )
    {
      s[i] = '1';
    }
  }
  return s;
}

std::string monomial_name( unsigned monomial )
{
  if ( monomial == 0 )
  {
    return "1";
  }
  std::string s;
  if ( monomial & 4u )
    s += 'x';
  if ( monomial & 2u )
    s += 'y';
  if ( monomial & 1u )
    s += 'z';
  return s;
}

std::string Rule::anf_string() const
{
  const auto a = anf();
  if ( a == 0 )
  {
    return "0";
  }
  // highest monomial first: xyz, xy, xz, x, yz, y, z, 1
  std::string s;
  for ( int m = 7; m >= 0; --m )
  {
    if ( ( a >> m ) & 1u )
    {
      if ( !s.empty() )
      {
        s += "⊕";
      }
      s += monomial_name( static_cast<unsigned>( m ) );
    }
  }
  return s;
}

Rule make_rule( int wolfram_id )
{
  return Rule( wolfram_id );
}

Rule complement( Rule r )
{
  return Rule( 255 - r.id() );
}

int hamming( Rule f, Rule g )
{
  return std::popcount( static_cast<unsigned>( f.truth_table() ^ g.truth_table() ) );
}

bool is_linear( Rule r )
{
  return ( r.anf() & ~0b0001'0110u ) == 0;
}

bool is_affine( Rule r )
{
  return ( r.anf() & ~0b0001'0111u ) == 0;
}

std::vector<Rule> linear_rules()
{
  std::vector<Rule> out;
  for ( unsigned a = 0; a < 8; ++a )
  {
    // a selects among the monomials z, y, x
    const std::uint8_t anf = static_cast<std::uint8_t>( ( ( a & 1u ) << 1 ) | ( ( a & 2u ) << 1 ) | ( ( a & 4u ) << 2 ) );
    out.push_back( Rule::from_anf( anf ) );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

std::vector<Rule> affine_rules()
{
  auto out = linear_rules();
  for ( std::size_t i = 0, n = out.size(); i < n; ++i )
  {
    out.push_back( complement( out[i] ) );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

namespace
{
NearestResult nearest_in( Rule f, const std::vector<Rule>& candidates )
{
  NearestResult r;
  r.distance = 9;
  for ( auto c : candidates )
  {
    const auto d = hamming( f, c );
    if ( d < r.distance )
    {
      r.distance = d;
      r.witnesses.clear();
    }
    if ( d == r.distance )
    {
      r.witnesses.push_back( c );
    }
  }
  return r;
}
} // namespace

NearestResult nearest_affine( Rule f )
{
  static const auto affine = affine_rules();
  return nearest_in( f, affine );
}

NearestResult nearest_linear( Rule f )
{
  static const auto linear = linear_rules();
  return nearest_in( f, linear );
}

std::array<std::size_t, 9> DistancePartition::sizes() const
{
  std::array<std::size_t, 9> s{};
  for ( std::size_t m = 0; m < classes.size(); ++m )
  {
    s[m] = classes[m].size();
  }
  return s;
}

DistancePartition distance_partition( Rule g )
{
  DistancePartition p;
  p.reference = g;
  for ( int id = 0; id < 256; ++id )
  {
    const Rule r( id );
    p.classes[static_cast<std::size_t>( hamming( g, r ) )].push_back( r );
  }
  return p;
}

} // namespace linca
