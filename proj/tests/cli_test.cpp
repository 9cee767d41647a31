#include <xorlin/cli.hpp>
#include <xorlin/codes.hpp>
#include <xorlin/gf2.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

struct result
{
  int code;
  std::string out;
  std::string err;
};

result run( std::vector<std::string> const& args )
{
  std::ostringstream out;
  std::ostringstream err;
  int const code = xorlin::cli::run( args, out, err );
  return { code, out.str(), err.str() };
}

} // namespace

TEST_CASE( "circuit statistics" )
{
  auto const r = run( { "circuit", "hamming", "3", "--optimize", "--stats" } );
  CHECK( r.code == 0 );
  CHECK( r.out == "size=5 depth=2\n" );
  CHECK( run( { "circuit", "hadamard", "3" } ).out == "size=4 depth=2\n" );
}

TEST_CASE( "encode" )
{
  CHECK( run( { "encode", "hadamard", "3", "--msg", "100" } ).out == "00001111\n" );
  CHECK( run( { "encode", "hadamard", "3", "--msg", "0x4" } ).out == "00001111\n" );
  CHECK( run( { "encode", "sys-punct-hadamard", "3", "--msg", "0001" } ).out == "10010110\n" );
  for ( std::string family : { "punct-hadamard", "hamming", "ext-hamming", "shortened-hamming" } )
  {
    CHECK( run( { "encode", family, "3", "--msg", "0x1" } ).code == 0 );
  }
  CHECK( run( { "encode", "hadamard", "3", "--msg", "10" } ).code == 2 );
  CHECK( run( { "encode", "hadamard", "3", "--msg", "0x8" } ).code == 2 );
  CHECK( run( { "encode", "hadamard", "3", "--msg", "1x0" } ).code == 2 );
}

TEST_CASE( "matrix output round-trips" )
{
  for ( std::string family : { "hadamard", "punct-hadamard", "hamming", "ext-hamming", "shortened-hamming" } )
  {
    for ( std::string flag : { "--pcm", "" } )
    {
      std::vector<std::string> args{ "matrix", family, "3" };
      if ( !flag.empty() )
      {
        args.push_back( flag );
      }
      auto const r = run( args );
      REQUIRE( r.code == 0 );
      CHECK( xorlin::bit_matrix::parse( r.out ).to_string() == r.out );
    }
  }
  CHECK( run( { "matrix", "hamming", "3", "--pcm" } ).out == "0001111\n0110011\n1010101\n" );
  CHECK( run( { "matrix", "punct-hadamard", "3", "--systematic" } ).out == xorlin::gen_systematic_punctured( 3 ).to_string() );
  CHECK( run( { "matrix", "ext-hamming", "3", "--pcm", "--systematic" } ).out == xorlin::gen_systematic_punctured( 3 ).to_string() );
  CHECK( run( { "matrix", "hadamard", "3", "--systematic" } ).code == 2 );
}

TEST_CASE( "verify" )
{
  auto const b = run( { "verify", "bounds", "sys-punct-hadamard", "2", "--search" } );
  CHECK( b.code == 0 );
  CHECK( b.out == "lower=2 achieved=2 searched=2 tight=yes\n" );
  CHECK( run( { "verify", "bounds", "hamming", "4" } ).out == "lower=18 achieved=18 searched=skipped tight=yes\n" );
  CHECK( run( { "verify", "distance", "hadamard", "4" } ).out == "distance=8\n" );
  CHECK( run( { "verify", "distance", "hamming", "3" } ).out == "distance=3\n" );
  CHECK( run( { "verify", "distance", "hamming", "5" } ).code == 1 );
}

TEST_CASE( "DOT output file" )
{
  std::string const path = "cli_test_circuit.dot";
  auto const r = run( { "circuit", "hamming", "3", "--optimize", "--dot", path } );
  CHECK( r.code == 0 );
  CHECK( r.out.empty() );
  std::ifstream in( path );
  std::string first;
  std::getline( in, first );
  CHECK( first == "digraph circuit {" );
  std::remove( path.c_str() );
}

TEST_CASE( "bench" )
{
  auto const r = run( { "bench", "hamming", "4", "--iters", "100", "--seed", "3" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "encodes_per_second=" ) == 0u );
  CHECK( r.out.find( " xors=25" ) != std::string::npos );
}

TEST_CASE( "usage errors" )
{
  CHECK( run( {} ).code == 2 );
  CHECK( run( { "frobnicate" } ).code == 2 );
  CHECK( run( { "circuit", "golay", "3" } ).code == 2 );
  CHECK( run( { "circuit", "hamming" } ).code == 2 );
  CHECK( run( { "circuit", "hamming", "1" } ).code == 2 );
  CHECK( run( { "--help" } ).code == 0 );
}
