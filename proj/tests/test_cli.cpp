#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <linca/cli.hpp>

namespace
{
struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run( std::vector<std::string> args )
{
  std::ostringstream out;
  std::ostringstream err;
  const int code = linca::cli::run( args, out, err );
  return { code, out.str(), err.str() };
}
} // namespace

TEST_CASE( "rule info" )
{
  const auto r = run( { "rule", "info", "218" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "binary: 11011010" ) != std::string::npos );
  CHECK( r.out.find( "affine: no" ) != std::string::npos );
  CHECK( r.out.find( "nearest_linear: 90 (distance 1, witnesses 90)" ) != std::string::npos );
  CHECK( run( { "rule", "info", "300" } ).code == 2 );
}

TEST_CASE( "evolve" )
{
  CHECK( run( { "evolve", "--rule", "90", "--state", "0111", "--steps", "2" } ).out == "0111\n1101\n1100\n" );
  CHECK( run( { "evolve", "--rule", "128", "--state", "10101011", "--method", "windowed" } ).out == "10101011\n00000001\n" );
  CHECK( run( { "evolve", "--rule", "300", "--state", "1011" } ).code == 2 );
  CHECK( run( { "evolve", "--rule", "90", "--state", "10x1" } ).code == 2 );
  CHECK( run( { "evolve", "--rule", "90", "--state", "1011", "--method", "windowed", "--boundary", "nb" } ).code == 2 );
  CHECK( run( { "evolve", "--rule", "90", "--state", "10110", "--method", "windowed" } ).code == 2 );
  CHECK( run( { "evolve", "--rule", "218", "--state", "1011", "--method", "jacobian" } ).code == 2 );
  CHECK( run( { "evolve", "--rule", "90", "--state", "1011", "--n", "5" } ).code == 2 );
}

TEST_CASE( "evolution methods agree on affine rules" )
{
  for ( const char* rule : { "60", "90", "150", "165", "195" } )
  {
    const auto direct = run( { "evolve", "--rule", rule, "--state", "10110100", "--steps", "5", "--boundary", "pb" } );
    const auto jac = run( { "evolve", "--rule", rule, "--state", "10110100", "--steps", "5", "--boundary", "pb", "--method", "jacobian" } );
    const auto win = run( { "evolve", "--rule", rule, "--state", "10110100", "--steps", "5", "--method", "windowed" } );
    CHECK( direct.code == 0 );
    CHECK( direct.out == jac.out );
    CHECK( direct.out == win.out );
  }
}

TEST_CASE( "std and deviant output" )
{
  const auto dot = run( { "std", "--rule", "204", "--n", "3" } );
  CHECK( dot.code == 0 );
  CHECK( dot.out.rfind( "digraph std {", 0 ) == 0 );
  const auto json = run( { "std", "--rule", "90", "--format", "json", "--boundary", "pb" } );
  CHECK( json.out.find( "\"boundary\":\"pb\"" ) != std::string::npos );
  CHECK( run( { "std", "--rule", "90", "--n", "21" } ).code == 2 );

  const auto dev = run( { "deviant", "--rule", "218" } );
  CHECK( dev.code == 0 );
  CHECK( dev.out.find( "\"deviant\":[7,14,15]" ) != std::string::npos );
  CHECK( dev.out.find( "\"ratio\":\"3/16\"" ) != std::string::npos );
}

TEST_CASE( "matrices" )
{
  const auto r = run( { "matrices", "--rule", "204" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "1 matrices" ) != std::string::npos );
  CHECK( r.out.find( "1000\n0100\n0010\n0001" ) != std::string::npos );
  CHECK( run( { "matrices", "--rule", "255" } ).out.find( "complement" ) != std::string::npos );
}

TEST_CASE( "verify" )
{
  const auto list = run( { "verify", "--list" } );
  CHECK( list.code == 0 );
  CHECK( list.out.find( "complement-distance\n" ) != std::string::npos );
  const auto one = run( { "verify", "--suite", "complement-distance" } );
  CHECK( one.code == 0 );
  CHECK( one.out.find( "1/1 criteria passed" ) != std::string::npos );
  CHECK( run( { "verify", "--suite", "no-such-suite" } ).code == 2 );
  CHECK( run( {} ).code == 2 );
}
