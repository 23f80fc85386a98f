#include <linca/cli.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <linca/ca.hpp>
#include <linca/derivative.hpp>
#include <linca/deviant.hpp>
#include <linca/rule.hpp>
#include <linca/verify.hpp>
#include <linca/window.hpp>

namespace linca::cli
{

namespace
{

/// Input was syntactically valid but semantically unusable.
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string join_ids( const std::vector<Rule>& rules )
{
  std::string s;
  for ( auto r : rules )
  {
    s += ( s.empty() ? "" : "," ) + std::to_string( r.id() );
  }
  return s;
}

void rule_info( int id, std::ostream& out )
{
  const Rule r( id );
  const auto nl = nearest_linear( r );
  const auto na = nearest_affine( r );
  out << "rule: " << r.id() << '\n'
      << "binary: " << r.binary() << '\n'
      << "truth_table:";
  for ( unsigned nb = 0; nb < 8; ++nb )
  {
    out << ' ' << BitVector( 3, nb ).to_string() << "->" << r.output( nb );
  }
  out << '\n'
      << "anf: " << r.anf_string() << '\n'
      << "degree: " << r.degree() << '\n'
      << "parity: " << ( r.is_odd() ? "odd" : "even" ) << '\n'
      << "linear: " << ( is_linear( r ) ? "yes" : "no" ) << '\n'
      << "affine: " << ( is_affine( r ) ? "yes" : "no" ) << '\n'
      << "complement: " << complement( r ).id() << '\n'
      << "nearest_linear: " << nl.first().id() << " (distance " << nl.distance << ", witnesses " << join_ids( nl.witnesses ) << ")\n"
      << "nearest_affine: " << na.first().id() << " (distance " << na.distance << ", witnesses " << join_ids( na.witnesses ) << ")\n";
}

struct EvolveOptions
{
  int rule = 0;
  std::string state;
  std::size_t steps = 1;
  std::string boundary;
  std::string method = "direct";
  std::size_t n = 0;
};

void evolve( const EvolveOptions& o, std::ostream& out )
{
  const Rule r( o.rule );
  auto s = State::parse( o.state );
  if ( o.n != 0 && o.n != s.width() )
  {
    throw UsageError( "--n " + std::to_string( o.n ) + " does not match state length " + std::to_string( s.width() ) );
  }
  const auto n = s.width();
  if ( n < CaConfig::min_cells )
  {
    throw UsageError( "a CA needs at least 3 cells" );
  }

  Boundary boundary = Boundary::Null;
  if ( o.method == "windowed" )
  {
    if ( !o.boundary.empty() && parse_boundary( o.boundary ) != Boundary::Periodic )
    {
      throw UsageError( "the windowed method is defined for periodic boundary only" );
    }
    if ( n < 4 || n % 2 != 0 )
    {
      throw UsageError( "the windowed method needs an even number of cells >= 4" );
    }
    boundary = Boundary::Periodic;
  }
  else if ( !o.boundary.empty() )
  {
    boundary = parse_boundary( o.boundary );
  }

  const auto ca = CaConfig::uniform( r, n, boundary );
  std::optional<Gf2Matrix> j;
  if ( o.method == "jacobian" )
  {
    j = constant_jacobian( ca );
    if ( !j )
    {
      throw UsageError( "rule " + std::to_string( r.id() ) + " is not affine; the jacobian method does not apply" );
    }
  }

  out << s.to_string() << '\n';
  for ( std::size_t t = 0; t < o.steps; ++t )
  {
    if ( o.method == "direct" )
    {
      s = step( ca, s );
    }
    else if ( o.method == "jacobian" )
    {
      // affine rules with a constant term add 1 to every cell
      s = r.is_odd() ? ~mat_vec_mul( *j, s ) : mat_vec_mul( *j, s );
    }
    else
    {
      s = evolve_windowed( r, s );
    }
    out << s.to_string() << '\n';
  }
}

void write_output( const std::string& text, const std::string& path, std::ostream& out )
{
  if ( path.empty() )
  {
    out << text;
    return;
  }
  std::ofstream f( path );
  if ( !f )
  {
    throw UsageError( "cannot open " + path + " for writing" );
  }
  f << text;
}

void print_matrices( int id, std::ostream& out )
{
  const Rule r( id );
  const auto& set = matrix_table( r );
  out << "rule " << r.id() << " (" << r.anf_string() << "): " << set.members.size() << " matrices\n";
  for ( std::size_t k = 0; k < set.members.size(); ++k )
  {
    out << "\nmatrix " << k << ":\n" << set.members[k].to_text() << '\n';
  }
  out << "\nwindow  output  matrix\n";
  for ( unsigned w = 0; w < 16; ++w )
  {
    const auto win = Window::from_value( w );
    out << win.bits().to_string() << "    " << set.apply( win ).to_string() << "    ";
    if ( w == 0 && set.zero_window_mode == ZeroWindowMode::Complement )
    {
      out << "complement";
    }
    else
    {
      out << set.assignment[w];
    }
    out << '\n';
  }
}

int verify( const std::string& suite, std::ostream& out )
{
  const auto results = verify::run_suite( suite );
  std::size_t passed = 0;
  for ( const auto& r : results )
  {
    passed += r.passed;
    out << ( r.passed ? "PASS" : "FAIL" ) << " [" << std::setw( 2 ) << r.id << "] " << r.name << ": " << r.detail << '\n';
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? Success : VerificationFailed;
}

} // namespace

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Linear-operator analysis of elementary cellular automata", "linca" };
  app.require_subcommand( 1 );

  auto* rule_cmd = app.add_subcommand( "rule", "Inspect a rule" );
  rule_cmd->require_subcommand( 1 );
  int info_id = 0;
  auto* info_cmd = rule_cmd->add_subcommand( "info", "Truth table, ANF, affinity and nearest linear/affine rules" );
  info_cmd->add_option( "id", info_id, "Wolfram rule number" )->required()->check( CLI::Range( 0, 255 ) );

  EvolveOptions ev;
  auto* evolve_cmd = app.add_subcommand( "evolve", "Evolve a uniform CA from a state" );
  evolve_cmd->add_option( "--rule", ev.rule, "Wolfram rule number" )->required()->check( CLI::Range( 0, 255 ) );
  evolve_cmd->add_option( "--state", ev.state, "Initial state as a bit string" )->required();
  evolve_cmd->add_option( "--steps", ev.steps, "Number of steps" )->check( CLI::NonNegativeNumber );
  evolve_cmd->add_option( "--boundary", ev.boundary, "nb or pb (default nb; windowed implies pb)" )->check( CLI::IsMember( { "nb", "pb" } ) );
  evolve_cmd->add_option( "--method", ev.method, "direct, jacobian or windowed" )->check( CLI::IsMember( { "direct", "jacobian", "windowed" } ) );
  evolve_cmd->add_option( "--n", ev.n, "Cell count, must match the state length" );

  int std_rule = 0;
  std::size_t std_n = 4;
  std::string std_boundary = "nb";
  std::string std_format = "dot";
  std::string std_output;
  auto* std_cmd = app.add_subcommand( "std", "State transition diagram" );
  std_cmd->add_option( "--rule", std_rule, "Wolfram rule number" )->required()->check( CLI::Range( 0, 255 ) );
  std_cmd->add_option( "--n", std_n, "Cell count" )->check( CLI::Range( std::size_t{ 3 }, StdGraph::max_cells ) );
  std_cmd->add_option( "--boundary", std_boundary, "nb or pb" )->check( CLI::IsMember( { "nb", "pb" } ) );
  std_cmd->add_option( "--format", std_format, "dot or json" )->check( CLI::IsMember( { "dot", "json" } ) );
  std_cmd->add_option( "--output", std_output, "Write to a file instead of stdout" );

  int dev_rule = 0;
  std::size_t dev_n = 4;
  std::string dev_boundary = "nb";
  std::string dev_output;
  auto* dev_cmd = app.add_subcommand( "deviant", "Deviant-state report against the nearest linear rule" );
  dev_cmd->add_option( "--rule", dev_rule, "Wolfram rule number" )->required()->check( CLI::Range( 0, 255 ) );
  dev_cmd->add_option( "--n", dev_n, "Cell count" )->check( CLI::Range( std::size_t{ 3 }, StdGraph::max_cells ) );
  dev_cmd->add_option( "--boundary", dev_boundary, "nb or pb" )->check( CLI::IsMember( { "nb", "pb" } ) );
  dev_cmd->add_option( "--output", dev_output, "Write to a file instead of stdout" );

  int mat_rule = 0;
  auto* mat_cmd = app.add_subcommand( "matrices", "Minimal 4-bit window matrix set" );
  mat_cmd->add_option( "--rule", mat_rule, "Wolfram rule number" )->required()->check( CLI::Range( 0, 255 ) );

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand( "verify", "Run the exhaustive verification suites" );
  verify_cmd->add_option( "--suite", suite, "Suite name or 'all'" );
  verify_cmd->add_flag_callback( "--list", [&] {
    for ( const auto& name : verify::suite_names() )
    {
      out << name << '\n';
    }
    throw CLI::Success();
  }, "List suite names" );

  std::vector<std::string> argv_storage{ "linca" };
  argv_storage.insert( argv_storage.end(), args.begin(), args.end() );
  std::vector<const char*> argv;
  for ( const auto& a : argv_storage )
  {
    argv.push_back( a.c_str() );
  }

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( const CLI::CallForHelp& )
  {
    out << app.help();
    return Success;
  }
  catch ( const CLI::CallForAllHelp& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return Success;
  }
  catch ( const CLI::Success& )
  {
    return Success;
  }
  catch ( const CLI::ParseError& e )
  {
    err << "error: " << e.what() << '\n';
    return InvalidInput;
  }

  try
  {
    if ( *info_cmd )
    {
      rule_info( info_id, out );
    }
    else if ( *evolve_cmd )
    {
      evolve( ev, out );
    }
    else if ( *std_cmd )
    {
      const auto g = build_std( CaConfig::uniform( Rule( std_rule ), std_n, parse_boundary( std_boundary ) ) );
      write_output( std_format == "dot" ? to_dot( g ) : to_json( g ) + "\n", std_output, out );
    }
    else if ( *dev_cmd )
    {
      const auto report = analyze( Rule( dev_rule ), dev_n, parse_boundary( dev_boundary ) );
      write_output( to_json( report ) + "\n", dev_output, out );
    }
    else if ( *mat_cmd )
    {
      print_matrices( mat_rule, out );
    }
    else if ( *verify_cmd )
    {
      return verify( suite, out );
    }
  }
  catch ( const std::invalid_argument& e )
  {
    err << "error: " << e.what() << '\n';
    return InvalidInput;
  }
  catch ( const UsageError& e )
  {
    err << "error: " << e.what() << '\n';
    return InvalidInput;
  }
  return Success;
}

} // namespace linca::cli
