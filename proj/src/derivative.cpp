#include <linca/derivative.hpp>

#include <algorithm>
#include <stdexcept>

namespace linca
{

Rule derivative( Rule f, Var v )
{
  const auto var = static_cast<unsigned>( v );
  const auto a = f.anf();
  unsigned d = 0;
  for ( unsigned m = 0; m < 8; ++m )
  {
    if ( ( m & var ) && ( ( a >> m ) & 1u ) )
    {
      d |= 1u << ( m ^ var );
    }
  }
  return Rule::from_anf( static_cast<std::uint8_t>( d ) );
}

Rule restrict( Rule f, Var v, bool value )
{
  const auto var = static_cast<unsigned>( v );
  unsigned tt = 0;
  for ( unsigned i = 0; i < 8; ++i )
  {
    const auto src = value ? ( i | var ) : ( i & ~var );
    tt |= static_cast<unsigned>( f.output( src ) ) << i;
  }
  return Rule::from_truth_table( static_cast<std::uint8_t>( tt ) );
}

Jacobian::Jacobian( std::size_t n, Boundary boundary )
    : n_( n ), boundary_( boundary ), entries_( n * n )
{
}

bool Jacobian::is_constant() const
{
  return std::all_of( entries_.begin(), entries_.end(), []( Rule r ) { return r.is_constant(); } );
}

std::string Jacobian::to_text() const
{
  std::string s;
  for ( std::size_t i = 0; i < n_; ++i )
  {
    if ( i != 0 )
    {
      s += '\n';
    }
    for ( std::size_t j = 0; j < n_; ++j )
    {
      if ( j != 0 )
      {
        s += ' ';
      }
      const auto e = entry( i, j );
      s += e.id() == 0 ? "0" : e.id() == 255 ? "1" : e.anf_string();
    }
  }
  return s;
}

Jacobian jacobian( const CaConfig& ca )
{
  const auto n = ca.size();
  const auto periodic = ca.boundary() == Boundary::Periodic;
  Jacobian jac( n, ca.boundary() );
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto f = ca.rule( i );
    // null boundary: the missing neighbor is the constant 0, not a column
    if ( !periodic && i == 0 )
    {
      f = restrict( f, Var::X, false );
    }
    if ( !periodic && i + 1 == n )
    {
      f = restrict( f, Var::Z, false );
    }
    if ( i > 0 || periodic )
    {
      jac.set( i, i == 0 ? n - 1 : i - 1, derivative( f, Var::X ) );
    }
    jac.set( i, i, derivative( f, Var::Y ) );
    if ( i + 1 < n || periodic )
    {
      jac.set( i, i + 1 == n ? 0 : i + 1, derivative( f, Var::Z ) );
    }
  }
  return jac;
}

Gf2Matrix evaluate( const Jacobian& j, const State& s )
{
  if ( s.width() != j.size() )
  {
    throw std::invalid_argument( "state length does not match the Jacobian" );
  }
  std::vector<BitVector> rows;
  rows.reserve( j.size() );
  for ( std::size_t i = 0; i < j.size(); ++i )
  {
    const auto nb = neighborhood( s, i, j.boundary() );
    auto row = BitVector::zeros( j.size() );
    for ( std::size_t c = 0; c < j.size(); ++c )
    {
      if ( j.entry( i, c ).output( nb ) )
      {
        row = row.with( c, true );
      }
    }
    rows.push_back( row );
  }
  return Gf2Matrix( std::move( rows ) );
}

std::optional<Gf2Matrix> constant_jacobian( const CaConfig& ca )
{
  const auto j = jacobian( ca );
  if ( !j.is_constant() )
  {
    return std::nullopt;
  }
  return evaluate( j, State::zeros( ca.size() ) );
}

} // namespace linca
