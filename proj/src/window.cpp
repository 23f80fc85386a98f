#include <linca/window.hpp>

#include <algorithm>
#include <bit>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace linca
{

Window::Window( const BitVector& bits )
    : bits_( bits )
{
  if ( bits.width() != width )
  {
    throw std::invalid_argument( "a window has exactly 4 bits" );
  }
}

std::vector<Rule> fundamental_rules()
{
  std::vector<Rule> out;
  for ( int m = 7; m >= 0; --m )
  {
    out.push_back( Rule::from_anf( static_cast<std::uint8_t>( 1u << m ) ) );
  }
  return out;
}

BitVector window_output( Rule rule, const Window& w )
{
  return step( CaConfig::uniform( rule, Window::width, Boundary::Periodic ), w.bits() );
}

std::uint64_t count_matrices( const BitVector& input, const BitVector& output )
{
  if ( input.width() != output.width() || input.width() > 8 )
  {
    throw std::invalid_argument( "count_matrices: widths must match and be at most 8" );
  }
  // rows are independent systems with one equation each
  std::uint64_t total = 1;
  for ( std::size_t i = 0; i < input.width(); ++i )
  {
    const RowConstraint c{ input, output.get( i ) };
    total *= solve_row( input.width(), std::span( &c, 1 ) ).count();
  }
  return total;
}

std::uint64_t count_matrices( Rule rule, const Window& w )
{
  return count_matrices( w.bits(), window_output( rule, w ) );
}

Gf2Matrix canonical_matrix( const BitVector& input, const BitVector& output )
{
  if ( input.width() != output.width() )
  {
    throw std::invalid_argument( "canonical_matrix: width mismatch" );
  }
  const auto n = input.width();
  const auto pivot = input.first_set();
  if ( !pivot )
  {
    if ( !output.is_zero() )
    {
      throw NoMatrixError( "no matrix maps the zero vector to " + output.to_string() );
    }
    return Gf2Matrix::zero( n );
  }
  const auto one_row = BitVector::unit( n, *pivot );
  std::vector<BitVector> rows;
  for ( std::size_t i = 0; i < n; ++i )
  {
    rows.push_back( output.get( i ) ? one_row : BitVector::zeros( n ) );
  }
  return Gf2Matrix( std::move( rows ) );
}

Gf2Matrix canonical_matrix( Rule rule, const Window& w )
{
  return canonical_matrix( w.bits(), window_output( rule, w ) );
}

BitVector WindowMatrixSet::apply( const Window& w ) const
{
  const auto product = mat_vec_mul( matrix_for( w ), w.bits() );
  if ( w.is_zero() && zero_window_mode == ZeroWindowMode::Complement )
  {
    return ~product;
  }
  return product;
}

namespace
{

constexpr unsigned nonzero_windows = 15;
constexpr unsigned group_count = 1u << nonzero_windows;

/* Window v (1..15) is element v-1 of a group mask.  A group is feasible when
   one matrix maps every window in it to its output; rows are independent, so
   this is consistency of the stacked (input | output) system.  The check is
   incremental: each mask extends the echelon basis of the mask without its
   highest element. */
std::vector<bool> feasible_groups( const std::array<unsigned, 16>& out )
{
  std::vector<bool> feasible( group_count, false );
  // basis[mask][p]: augmented vector (input << 4 | output) whose leading input bit is p
  std::vector<std::array<std::uint8_t, 4>> basis( group_count, std::array<std::uint8_t, 4>{} );
  feasible[0] = true;
  for ( unsigned mask = 1; mask < group_count; ++mask )
  {
    const unsigned top = static_cast<unsigned>( std::bit_width( mask ) ) - 1;
    const unsigned prev = mask ^ ( 1u << top );
    if ( !feasible[prev] )
    {
      continue;
    }
    auto b = basis[prev];
    const unsigned w = top + 1;
    unsigned v = ( w << 4 ) | out[w];
    for ( int p = 3; p >= 0; --p )
    {
      if ( ( v >> ( 4 + p ) ) & 1u )
      {
        if ( b[static_cast<std::size_t>( p )] == 0 )
        {
          b[static_cast<std::size_t>( p )] = static_cast<std::uint8_t>( v );
          v = 0;
          break;
        }
        v ^= b[static_cast<std::size_t>( p )];
      }
    }
    if ( ( v & 0x0fu ) != 0 )
    {
      continue; // input reduced to zero but output did not
    }
    feasible[mask] = true;
    basis[mask] = b;
  }
  return feasible;
}

struct CoverSearch
{
  const std::vector<unsigned>& maximal;
  std::vector<unsigned> chosen;
  // failed_budget[u]: largest remaining budget known not to cover u
  std::vector<int> failed_budget = std::vector<int>( group_count, -1 );

  bool cover( unsigned uncovered, int budget )
  {
    if ( uncovered == 0 )
    {
      return true;
    }
    if ( budget == 0 || failed_budget[uncovered] >= budget )
    {
      return false;
    }
    const unsigned lowest = uncovered & ( ~uncovered + 1u );
    for ( auto m : maximal )
    {
      if ( !( m & lowest ) )
      {
        continue;
      }
      chosen.push_back( m );
      if ( cover( uncovered & ~m, budget - 1 ) )
      {
        return true;
      }
      chosen.pop_back();
    }
    failed_budget[uncovered] = budget;
    return false;
  }
};

Gf2Matrix matrix_for_group( unsigned group, const std::array<unsigned, 16>& out )
{
  bool all_zero = true;
  bool all_fixed = true;
  for ( unsigned w = 1; w <= nonzero_windows; ++w )
  {
    if ( group & ( 1u << ( w - 1 ) ) )
    {
      all_zero = all_zero && out[w] == 0;
      all_fixed = all_fixed && out[w] == w;
    }
  }
  if ( all_zero )
  {
    return Gf2Matrix::zero( Window::width );
  }
  if ( all_fixed )
  {
    return Gf2Matrix::identity( Window::width );
  }
  std::vector<BitVector> rows;
  for ( std::size_t i = 0; i < Window::width; ++i )
  {
    std::vector<RowConstraint> constraints;
    for ( unsigned w = 1; w <= nonzero_windows; ++w )
    {
      if ( group & ( 1u << ( w - 1 ) ) )
      {
        constraints.push_back( { BitVector( Window::width, w ), BitVector( Window::width, out[w] ).get( i ) } );
      }
    }
    const auto solutions = solve_row( Window::width, constraints );
    if ( !solutions.consistent )
    {
      throw std::logic_error( "feasible window group has an inconsistent row system" );
    }
    rows.push_back( *solutions.canonical() );
  }
  return Gf2Matrix( std::move( rows ) );
}

int member_rank( const Gf2Matrix& m )
{
  if ( m == Gf2Matrix::zero( Window::width ) )
    return 0;
  if ( m == Gf2Matrix::identity( Window::width ) )
    return 1;
  return 2;
}

} // namespace

WindowMatrixSet minimal_matrix_set( Rule rule )
{
  std::array<unsigned, 16> out{};
  for ( unsigned w = 0; w < 16; ++w )
  {
    out[w] = static_cast<unsigned>( window_output( rule, Window::from_value( w ) ).value() );
  }

  const auto feasible = feasible_groups( out );
  std::vector<unsigned> maximal;
  for ( unsigned mask = 1; mask < group_count; ++mask )
  {
    if ( !feasible[mask] )
    {
      continue;
    }
    bool is_max = true;
    for ( unsigned b = 0; b < nonzero_windows && is_max; ++b )
    {
      const auto bit = 1u << b;
      is_max = ( mask & bit ) || !feasible[mask | bit];
    }
    if ( is_max )
    {
      maximal.push_back( mask );
    }
  }
  // try larger groups first
  std::stable_sort( maximal.begin(), maximal.end(), []( unsigned a, unsigned b ) { return std::popcount( a ) > std::popcount( b ); } );

  CoverSearch search{ maximal, {} };
  const unsigned all = group_count - 1;
  for ( int budget = 1; budget <= static_cast<int>( nonzero_windows ); ++budget )
  {
    if ( search.cover( all, budget ) )
    {
      break;
    }
  }

  std::vector<std::pair<Gf2Matrix, unsigned>> groups; // matrix, windows it is assigned
  unsigned covered = 0;
  for ( auto m : search.chosen )
  {
    groups.emplace_back( matrix_for_group( m, out ), m & ~covered );
    covered |= m;
  }
  std::sort( groups.begin(), groups.end(), []( const auto& a, const auto& b ) {
    const auto ra = member_rank( a.first );
    const auto rb = member_rank( b.first );
    return ra != rb ? ra < rb : a.first < b.first;
  } );

  WindowMatrixSet set;
  set.rule = rule;
  set.zero_window_mode = rule.is_odd() ? ZeroWindowMode::Complement : ZeroWindowMode::ZeroMatrix;
  set.assignment[0] = 0;
  for ( std::size_t k = 0; k < groups.size(); ++k )
  {
    set.members.push_back( groups[k].first );
    for ( unsigned w = 1; w <= nonzero_windows; ++w )
    {
      if ( groups[k].second & ( 1u << ( w - 1 ) ) )
      {
        set.assignment[w] = k;
      }
    }
  }
  return set;
}

const WindowMatrixSet& matrix_table( Rule rule )
{
  static std::array<std::once_flag, 256> once;
  static std::array<std::optional<WindowMatrixSet>, 256> table;
  const auto id = static_cast<std::size_t>( rule.id() );
  std::call_once( once[id], [&] { table[id] = minimal_matrix_set( rule ); } );
  return *table[id];
}

namespace
{
void require_windowable( const State& s )
{
  if ( s.width() < 4 || s.width() % 2 != 0 )
  {
    throw std::invalid_argument( "windowed evolution needs an even number of cells >= 4, got " + std::to_string( s.width() ) );
  }
}
} // namespace

std::vector<WindowStep> evolve_windowed_trace( const WindowMatrixSet& table, const State& s )
{
  require_windowable( s );
  const auto n = s.width();
  std::vector<WindowStep> steps;
  steps.reserve( n / 2 );
  for ( std::size_t block = 0; block < n / 2; ++block )
  {
    // cells 2b-1 .. 2b+2 (cyclic); the middle two are the block's own cells
    auto bits = BitVector::zeros( Window::width );
    for ( std::size_t k = 0; k < Window::width; ++k )
    {
      const auto cell = ( 2 * block + n - 1 + k ) % n;
      bits = bits.with( k, s.get( cell ) );
    }
    const Window w( bits );
    WindowStep st{ w, table.assignment[w.value()], table.apply( w ), w.is_zero() && table.zero_window_mode == ZeroWindowMode::Complement };
    steps.push_back( std::move( st ) );
  }
  return steps;
}

State evolve_windowed( const WindowMatrixSet& table, const State& s )
{
  const auto steps = evolve_windowed_trace( table, s );
  auto out = State::zeros( s.width() );
  for ( std::size_t block = 0; block < steps.size(); ++block )
  {
    out = out.with( 2 * block, steps[block].product.get( 1 ) );
    out = out.with( 2 * block + 1, steps[block].product.get( 2 ) );
  }
  return out;
}

State evolve_windowed( Rule rule, const State& s )
{
  return evolve_windowed( matrix_table( rule ), s );
}

} // namespace linca
