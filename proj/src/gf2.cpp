#include <linca/gf2.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace linca
{

BitVector::BitVector( std::size_t width, std::uint64_t value )
    : width_( width ), value_( value )
{
  if ( width == 0 || width > max_width )
  {
    throw std::invalid_argument( "bit vector width must be in 1..64, got " + std::to_string( width ) );
  }
  if ( ( value & ~mask( width ) ) != 0 )
  {
    throw std::invalid_argument( "value " + std::to_string( value ) + " does not fit in " + std::to_string( width ) + " bits" );
  }
}

BitVector BitVector::ones( std::size_t width )
{
  return BitVector( width, mask( width ) );
}

BitVector BitVector::unit( std::size_t width, std::size_t pos )
{
  return zeros( width ).with( pos, true );
}

BitVector BitVector::parse( std::string_view bits )
{
  if ( bits.empty() || bits.size() > max_width )
  {
    throw std::invalid_argument( "bit string must have 1..64 characters" );
  }
  std::uint64_t v = 0;
  for ( char c : bits )
  {
    if ( c != '0' && c != '1' )
    {
      throw std::invalid_argument( "malformed bit string '" + std::string( bits ) + "'" );
    }
    v = ( v << 1 ) | static_cast<std::uint64_t>( c == '1' );
  }
  return BitVector( bits.size(), v );
}

bool BitVector::get( std::size_t pos ) const
{
  if ( pos >= width_ )
  {
    throw std::out_of_range( "bit position out of range" );
  }
  return ( value_ >> ( width_ - 1 - pos ) ) & 1u;
}

BitVector BitVector::with( std::size_t pos, bool bit ) const
{
  if ( pos >= width_ )
  {
    throw std::out_of_range( "bit position out of range" );
  }
  const auto m = std::uint64_t{ 1 } << ( width_ - 1 - pos );
  return BitVector( width_, bit ? ( value_ | m ) : ( value_ & ~m ) );
}

BitVector BitVector::flipped( std::size_t pos ) const
{
  return with( pos, !get( pos ) );
}

std::size_t BitVector::weight() const noexcept
{
  return static_cast<std::size_t>( std::popcount( value_ ) );
}

std::optional<std::size_t> BitVector::first_set() const noexcept
{
  if ( value_ == 0 )
  {
    return std::nullopt;
  }
  return width_ - static_cast<std::size_t>( std::bit_width( value_ ) );
}

std::string BitVector::to_string() const
{
  std::string s( width_, '0' );
  for ( std::size_t i = 0; i < width_; ++i )
  {
    if ( get( i ) )
    {
      s[i] = '1';
    }
  }
  return s;
}

namespace
{
void require_same_width( const BitVector& a, const BitVector& b )
{
  if ( a.width() != b.width() )
  {
    throw std::invalid_argument( "bit vector width mismatch" );
  }
}
} // namespace

BitVector BitVector::operator^( const BitVector& other ) const
{
  require_same_width( *this, other );
  return BitVector( width_, value_ ^ other.value_ );
}

BitVector BitVector::operator&( const BitVector& other ) const
{
  require_same_width( *this, other );
  return BitVector( width_, value_ & other.value_ );
}

BitVector BitVector::operator~() const
{
  return BitVector( width_, ~value_ & mask( width_ ) );
}

bool dot( const BitVector& a, const BitVector& b )
{
  return ( a & b ).parity();
}

Gf2Matrix::Gf2Matrix( std::vector<BitVector> rows )
    : rows_( std::move( rows ) )
{
  if ( rows_.empty() )
  {
    throw std::invalid_argument( "matrix must have at least one row" );
  }
  for ( const auto& r : rows_ )
  {
    if ( r.width() != rows_.size() )
    {
      throw std::invalid_argument( "matrix must be square" );
    }
  }
}

Gf2Matrix Gf2Matrix::zero( std::size_t n )
{
  return Gf2Matrix( std::vector<BitVector>( n, BitVector::zeros( n ) ) );
}

Gf2Matrix Gf2Matrix::identity( std::size_t n )
{
  std::vector<BitVector> rows;
  rows.reserve( n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    rows.push_back( BitVector::unit( n, i ) );
  }
  return Gf2Matrix( std::move( rows ) );
}

Gf2Matrix Gf2Matrix::parse( std::string_view text )
{
  std::vector<BitVector> rows;
  while ( !text.empty() )
  {
    const auto eol = text.find( '\n' );
    auto line = text.substr( 0, eol );
    if ( !line.empty() && line.back() == '\r' )
    {
      line.remove_suffix( 1 );
    }
    if ( !line.empty() )
    {
      rows.push_back( BitVector::parse( line ) );
    }
    if ( eol == std::string_view::npos )
    {
      break;
    }
    text.remove_prefix( eol + 1 );
  }
  return Gf2Matrix( std::move( rows ) );
}

Gf2Matrix Gf2Matrix::with_row( std::size_t i, const BitVector& r ) const
{
  if ( r.width() != size() )
  {
    throw std::invalid_argument( "row width mismatch" );
  }
  auto rows = rows_;
  rows.at( i ) = r;
  return Gf2Matrix( std::move( rows ) );
}

std::size_t Gf2Matrix::distinct_rows() const
{
  return std::set<BitVector>( rows_.begin(), rows_.end() ).size();
}

std::string Gf2Matrix::to_text() const
{
  std::string s;
  for ( std::size_t i = 0; i < rows_.size(); ++i )
  {
    if ( i != 0 )
    {
      s += '\n';
    }
    s += rows_[i].to_string();
  }
  return s;
}

BitVector mat_vec_mul( const Gf2Matrix& m, const BitVector& x )
{
  if ( m.size() != x.width() )
  {
    throw std::invalid_argument( "matrix is " + std::to_string( m.size() ) + "x" + std::to_string( m.size() ) +
                                 " but vector has length " + std::to_string( x.width() ) );
  }
  auto out = BitVector::zeros( x.width() );
  for ( std::size_t i = 0; i < m.size(); ++i )
  {
    if ( dot( m.row( i ), x ) )
    {
      out = out.with( i, true );
    }
  }
  return out;
}

std::size_t rank( const Gf2Matrix& m )
{
  std::vector<std::uint64_t> rows;
  for ( const auto& r : m.rows() )
  {
    rows.push_back( r.value() );
  }
  std::size_t r = 0;
  for ( int bit = static_cast<int>( m.size() ) - 1; bit >= 0 && r < rows.size(); --bit )
  {
    const auto b = std::uint64_t{ 1 } << bit;
    auto pivot = std::find_if( rows.begin() + static_cast<std::ptrdiff_t>( r ), rows.end(), [b]( auto v ) { return v & b; } );
    if ( pivot == rows.end() )
    {
      continue;
    }
    std::iter_swap( rows.begin() + static_cast<std::ptrdiff_t>( r ), pivot );
    for ( std::size_t k = 0; k < rows.size(); ++k )
    {
      if ( k != r && ( rows[k] & b ) )
      {
        rows[k] ^= rows[r];
      }
    }
    ++r;
  }
  return r;
}

namespace
{

/* Reduced row echelon form of the augmented system.  Each equation is stored
   as (coefficients, rhs); pivots are taken from the most significant bit. */
struct Echelon
{
  std::vector<std::pair<std::uint64_t, bool>> rows; // (coefficients, rhs), one per pivot
  std::vector<int> pivots;                          // pivot bit for each row
  bool consistent = true;
};

Echelon eliminate( std::size_t width, std::span<const RowConstraint> constraints )
{
  Echelon e;
  for ( const auto& c : constraints )
  {
    if ( c.input.width() != width )
    {
      throw std::invalid_argument( "constraint width mismatch" );
    }
    auto coeff = c.input.value();
    bool rhs = c.target;
    for ( std::size_t k = 0; k < e.rows.size(); ++k )
    {
      if ( coeff & ( std::uint64_t{ 1 } << e.pivots[k] ) )
      {
        coeff ^= e.rows[k].first;
        rhs ^= e.rows[k].second;
      }
    }
    if ( coeff == 0 )
    {
      if ( rhs )
      {
        e.consistent = false;
        return e;
      }
      continue;
    }
    const int pivot = std::bit_width( coeff ) - 1;
    const auto pb = std::uint64_t{ 1 } << pivot;
    for ( auto& [rc, rr] : e.rows )
    {
      if ( rc & pb )
      {
        rc ^= coeff;
        rr ^= rhs;
      }
    }
    e.rows.emplace_back( coeff, rhs );
    e.pivots.push_back( pivot );
  }
  return e;
}

} // namespace

bool row_system_consistent( std::size_t width, std::span<const RowConstraint> constraints )
{
  return eliminate( width, constraints ).consistent;
}

RowSolutionSet solve_row( std::size_t width, std::span<const RowConstraint> constraints )
{
  RowSolutionSet out;
  out.width = width;
  const auto e = eliminate( width, constraints );
  if ( !e.consistent )
  {
    return out;
  }
  out.consistent = true;
  out.free_dims = width - e.rows.size();

  std::uint64_t pivot_mask = 0;
  std::uint64_t particular = 0;
  for ( std::size_t k = 0; k < e.rows.size(); ++k )
  {
    pivot_mask |= std::uint64_t{ 1 } << e.pivots[k];
    if ( e.rows[k].second )
    {
      particular |= std::uint64_t{ 1 } << e.pivots[k];
    }
  }

  // Null-space basis, one vector per free bit.
  std::vector<std::uint64_t> basis;
  for ( int bit = static_cast<int>( width ) - 1; bit >= 0; --bit )
  {
    const auto fb = std::uint64_t{ 1 } << bit;
    if ( pivot_mask & fb )
    {
      continue;
    }
    std::uint64_t v = fb;
    for ( std::size_t k = 0; k < e.rows.size(); ++k )
    {
      if ( e.rows[k].first & fb )
      {
        v |= std::uint64_t{ 1 } << e.pivots[k];
      }
    }
    basis.push_back( v );
  }

  // Echelonize the basis by leading bit, then reduce the particular solution
  // to obtain the numerically smallest element of the coset.
  std::vector<std::uint64_t> ech;
  for ( auto v : basis )
  {
    for ( auto b : ech )
    {
      if ( v & ( std::uint64_t{ 1 } << ( std::bit_width( b ) - 1 ) ) )
      {
        v ^= b;
      }
    }
    if ( v == 0 )
    {
      continue;
    }
    const auto lead = std::uint64_t{ 1 } << ( std::bit_width( v ) - 1 );
    for ( auto& b : ech )
    {
      if ( b & lead )
      {
        b ^= v;
      }
    }
    ech.push_back( v );
  }
  std::sort( ech.begin(), ech.end(), std::greater<>{} );
  auto smallest = particular;
  for ( auto b : ech )
  {
    if ( smallest & ( std::uint64_t{ 1 } << ( std::bit_width( b ) - 1 ) ) )
    {
      smallest ^= b;
    }
  }

  if ( width > RowSolutionSet::enumeration_limit )
  {
    out.members.emplace_back( width, smallest );
    return out;
  }

  std::vector<std::uint64_t> all;
  all.reserve( std::size_t{ 1 } << ech.size() );
  for ( std::uint64_t combo = 0; combo < ( std::uint64_t{ 1 } << ech.size() ); ++combo )
  {
    auto v = smallest;
    for ( std::size_t k = 0; k < ech.size(); ++k )
    {
      if ( combo & ( std::uint64_t{ 1 } << k ) )
      {
        v ^= ech[k];
      }
    }
    all.push_back( v );
  }
  std::sort( all.begin(), all.end() );
  for ( auto v : all )
  {
    out.members.emplace_back( width, v );
  }
  return out;
}

} // namespace linca
