#include <xorlin/bounds.hpp>
#include <xorlin/circuit.hpp>
#include <xorlin/cli.hpp>
#include <xorlin/codes.hpp>
#include <xorlin/encoders.hpp>
#include <xorlin/errors.hpp>
#include <xorlin/gf2.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace xorlin::cli
{

namespace
{

/* a failed internal check; reported with exit code 1 */
class check_failure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct family_args
{
  std::string name;
  unsigned k = 0u;

  code_family family() const
  {
    auto const tag = parse_family( name );
    if ( !tag )
    {
      throw parameter_error( "unknown family '" + name + "'" );
    }
    return { *tag, k };
  }
};

void add_family( CLI::App& cmd, family_args& args )
{
  cmd.add_option( "family", args.name, "hadamard, punct-hadamard, sys-punct-hadamard, hamming, ext-hamming or shortened-hamming" )
      ->required();
  cmd.add_option( "k", args.k, "family parameter (r for shortened-hamming)" )->required();
}

std::size_t message_length( code_family f )
{
  std::size_t const p = std::size_t{ 1 } << f.k;
  switch ( f.tag )
  {
  case code_tag::hadamard:
    return f.k;
  case code_tag::punctured_hadamard:
  case code_tag::systematic_punctured_hadamard:
    return f.k + 1u;
  case code_tag::hamming:
  case code_tag::extended_hamming:
    return p - f.k - 1u;
  case code_tag::shortened_hamming:
    return p;
  }
  return 0u;
}

bit_vec encode( code_family f, bit_vec const& msg )
{
  switch ( f.tag )
  {
  case code_tag::hadamard:
    return p1_encode( msg, f.k );
  case code_tag::punctured_hadamard:
    return p2_nonsys_encode( msg, f.k );
  case code_tag::systematic_punctured_hadamard:
    return p2_encode( msg, f.k );
  case code_tag::hamming:
    return hamming_codeword( msg, f.k );
  case code_tag::extended_hamming:
    return ext_hamming_codeword( msg, f.k );
  case code_tag::shortened_hamming:
    return shortened_codeword( msg, f.k );
  }
  throw parameter_error( "unknown code family" );
}

bit_vec parse_message( std::string const& text, std::size_t length )
{
  if ( text.rfind( "0x", 0 ) == 0u || text.rfind( "0X", 0 ) == 0u )
  {
    auto const digits = text.substr( 2u );
    if ( digits.empty() || digits.find_first_not_of( "0123456789abcdefABCDEF" ) != std::string::npos )
    {
      throw parameter_error( "malformed hex message '" + text + "'" );
    }
    if ( length > 63u )
    {
      throw parameter_error( "hex messages are limited to 63 bits; use a 0/1 string" );
    }
    std::uint64_t value = 0u;
    try
    {
      value = std::stoull( digits, nullptr, 16 );
    }
    catch ( std::out_of_range const& )
    {
      throw parameter_error( "hex message '" + text + "' does not fit in " + std::to_string( length ) + " bits" );
    }
    if ( length < 64u && ( value >> length ) != 0u )
    {
      throw parameter_error( "hex message '" + text + "' does not fit in " + std::to_string( length ) + " bits" );
    }
    return t_bin( value, static_cast<unsigned>( length ) );
  }
  if ( text.size() != length )
  {
    throw parameter_error( "message needs " + std::to_string( length ) + " bits, got " + std::to_string( text.size() ) );
  }
  return bit_vec::from_string( text );
}

bit_matrix matrix_for( code_family f, bool systematic, bool pcm )
{
  if ( pcm )
  {
    if ( systematic && f.tag == code_tag::extended_hamming )
    {
      return pcm_systematic_ext_hamming( f.k );
    }
    if ( systematic && f.tag != code_tag::shortened_hamming )
    {
      throw parameter_error( std::string( family_name( f.tag ) ) + " has no systematic check matrix here" );
    }
    auto h = family_check_matrix( f );
    if ( !h )
    {
      throw parameter_error( std::string( family_name( f.tag ) ) + " has no check matrix for k=" + std::to_string( f.k ) );
    }
    return *h;
  }
  if ( systematic )
  {
    switch ( f.tag )
    {
    case code_tag::punctured_hadamard:
    case code_tag::systematic_punctured_hadamard:
      return gen_systematic_punctured( f.k );
    case code_tag::shortened_hamming:
      return gen_shortened( f.k );
    default:
      throw parameter_error( std::string( family_name( f.tag ) ) + " has no systematic generator here" );
    }
  }
  return family_generator( f );
}

void check_codeword( code_family f, bit_vec const& msg, bit_vec const& y )
{
  if ( y != naive_encode( family_generator( f ), msg ) )
  {
    throw check_failure( "encoder output differs from the generator product" );
  }
  if ( auto const h = family_check_matrix( f ) )
  {
    if ( mat_vec_mul( *h, y ).any() )
    {
      throw check_failure( "codeword has a nonzero syndrome" );
    }
  }
}

} // namespace

int run( std::span<std::string const> args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "XOR-minimal encoders for Hadamard and Hamming codes", "xorlin" };
  app.require_subcommand( 1 );

  family_args matrix_args;
  bool systematic = false;
  bool pcm = false;
  auto* matrix_cmd = app.add_subcommand( "matrix", "print a generator or check matrix" );
  add_family( *matrix_cmd, matrix_args );
  matrix_cmd->add_flag( "--systematic", systematic, "systematic form" );
  matrix_cmd->add_flag( "--pcm", pcm, "parity-check matrix instead of the generator" );

  family_args encode_args;
  std::string message;
  auto* encode_cmd = app.add_subcommand( "encode", "encode one message" );
  add_family( *encode_cmd, encode_args );
  encode_cmd->add_option( "--msg", message, "0/1 string, or 0x-prefixed hex read most significant bit first" )->required();

  family_args circuit_args;
  bool optimize_flag = false;
  bool stats_flag = false;
  std::string dot_path;
  auto* circuit_cmd = app.add_subcommand( "circuit", "trace the family's encoder into an XOR circuit" );
  add_family( *circuit_cmd, circuit_args );
  circuit_cmd->add_flag( "--optimize", optimize_flag, "fold constants, merge duplicates, drop dead gates" );
  circuit_cmd->add_option( "--dot", dot_path, "write the circuit in DOT format" );
  circuit_cmd->add_flag( "--stats", stats_flag, "print size and depth" );

  auto* verify_cmd = app.add_subcommand( "verify", "check bounds or distances" );
  verify_cmd->require_subcommand( 1 );

  family_args bounds_args;
  bool search_flag = false;
  search_budget budget;
  auto* bounds_cmd = verify_cmd->add_subcommand( "bounds", "compare the lower bound with the achieved and searched sizes" );
  add_family( *bounds_cmd, bounds_args );
  bounds_cmd->add_flag( "--search", search_flag, "run the exhaustive minimum-circuit search" );
  bounds_cmd->add_option( "--max-gates", budget.max_gates, "search gate cap" )->capture_default_str();
  bounds_cmd->add_option( "--timeout", budget.max_seconds, "search wall-clock cap in seconds" )
      ->capture_default_str()
      ->check( CLI::PositiveNumber );

  family_args distance_args;
  auto* distance_cmd = verify_cmd->add_subcommand( "distance", "brute-force minimum distance" );
  add_family( *distance_cmd, distance_args );

  family_args bench_args;
  std::size_t iters = 1000u;
  std::uint64_t seed = 1u;
  auto* bench_cmd = app.add_subcommand( "bench", "time the encoder on random messages" );
  add_family( *bench_cmd, bench_args );
  bench_cmd->add_option( "--iters", iters, "number of encodes" )->capture_default_str()->check( CLI::PositiveNumber );
  bench_cmd->add_option( "--seed", seed, "random seed" )->capture_default_str();

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::ParseError const& e )
  {
    if ( e.get_exit_code() == 0 )
    {
      app.exit( e, out, err );
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try
  {
    if ( *matrix_cmd )
    {
      out << matrix_for( matrix_args.family(), systematic, pcm ).to_string();
      return 0;
    }
    if ( *encode_cmd )
    {
      auto const f = encode_args.family();
      auto const msg = parse_message( message, message_length( f ) );
      auto const y = encode( f, msg );
      check_codeword( f, msg, y );
      out << y.to_string() << '\n';
      return 0;
    }
    if ( *circuit_cmd )
    {
      auto const f = circuit_args.family();
      auto c = trace( family_encoder( f.tag ), f.k );
      if ( optimize_flag )
      {
        c = optimize( c );
      }
      if ( !dot_path.empty() )
      {
        std::ofstream file( dot_path );
        if ( !( file << to_dot( c ) ) )
        {
          throw check_failure( "cannot write " + dot_path );
        }
      }
      if ( stats_flag || dot_path.empty() )
      {
        auto const s = stats( c );
        out << "size=" << s.size << " depth=" << s.depth << '\n';
      }
      return 0;
    }
    if ( *bounds_cmd )
    {
      auto const report = verify_tightness( bounds_args.family(), budget, search_flag );
      out << report.to_string() << '\n';
      if ( !report.consistent() )
      {
        err << "error: lower <= searched <= achieved does not hold\n";
        return 1;
      }
      return 0;
    }
    if ( *distance_cmd )
    {
      out << "distance=" << min_distance( family_generator( distance_args.family() ) ) << '\n';
      return 0;
    }
    if ( *bench_cmd )
    {
      auto const f = bench_args.family();
      auto const length = message_length( f );
      std::mt19937_64 rng( seed );
      std::vector<bit_vec> messages;
      for ( std::size_t i = 0; i < std::min<std::size_t>( iters, 64u ); ++i )
      {
        bit_vec m( length );
        for ( std::size_t b = 0; b < length; ++b )
        {
          m.set( b, rng() & 1u );
        }
        messages.push_back( std::move( m ) );
      }
      std::size_t ones = 0u;
      auto const start = std::chrono::steady_clock::now();
      for ( std::size_t i = 0; i < iters; ++i )
      {
        ones += encode( f, messages[i % messages.size()] ).weight();
      }
      std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start;
      auto const xors = trace( family_encoder( f.tag ), f.k ).num_xors();
      out << "encodes_per_second=" << static_cast<std::uint64_t>( static_cast<double>( iters ) / std::max( elapsed.count(), 1e-9 ) )
          << " xors=" << xors << " checksum=" << ones << '\n';
      return 0;
    }
  }
  catch ( precondition_error const& e )
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  catch ( std::invalid_argument const& e )
  {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace xorlin::cli
