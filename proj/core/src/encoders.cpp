#include "kernels.hpp"

#include <xorlin/codes.hpp>
#include <xorlin/encoders.hpp>
#include <xorlin/errors.hpp>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace xorlin
{

namespace
{

struct bit_backend
{
  using signal = std::uint8_t;

  signal zero() const { return 0u; }
  signal add( signal a, signal b ) const { return a ^ b; }
};

struct trace_backend
{
  using signal = node_id;

  circuit* sink;

  signal zero() { return sink->create_zero(); }
  signal add( signal a, signal b ) { return sink->create_xor( a, b ); }
};

void require_k( unsigned k, unsigned min, char const* what )
{
  if ( k < min || k > max_family_parameter )
  {
    throw parameter_error( std::string( what ) + " requires parameter in [" + std::to_string( min ) + ", " +
                           std::to_string( max_family_parameter ) + "], got " + std::to_string( k ) );
  }
}

void require_length( bit_vec const& x, std::size_t expected, char const* what )
{
  if ( x.size() != expected )
  {
    throw dimension_error( std::string( what ) + " expects length " + std::to_string( expected ) + ", got " +
                           std::to_string( x.size() ) );
  }
}

std::vector<std::uint8_t> unpack( bit_vec const& x )
{
  std::vector<std::uint8_t> bits( x.size() );
  for ( std::size_t i = 0; i < x.size(); ++i )
  {
    bits[i] = x[i];
  }
  return bits;
}

bit_vec pack( std::vector<std::uint8_t> const& bits )
{
  bit_vec v( bits.size() );
  for ( std::size_t i = 0; i < bits.size(); ++i )
  {
    if ( bits[i] )
    {
      v.set( i );
    }
  }
  return v;
}

std::size_t hamming_message_length( unsigned k )
{
  return ( std::size_t{ 1 } << k ) - k - 1u;
}

bool is_parity_slot( std::size_t index )
{
  return index == 0u || std::has_single_bit( index );
}

} // namespace

bit_vec p1_encode( bit_vec const& x, unsigned k )
{
  require_k( k, 1u, "p1_encode" );
  require_length( x, k, "p1_encode" );
  bit_backend b;
  auto const bits = unpack( x );
  return pack( kernels::p1( b, std::span<std::uint8_t const>( bits ), k ) );
}

bit_vec p2_encode( bit_vec const& x, unsigned k )
{
  require_k( k, 1u, "p2_encode" );
  require_length( x, k + 1u, "p2_encode" );
  bit_backend b;
  auto const bits = unpack( x );
  return pack( kernels::p2( b, std::span<std::uint8_t const>( bits ), k ) );
}

bit_vec p2_nonsys_encode( bit_vec const& x, unsigned k )
{
  require_k( k, 1u, "p2_nonsys_encode" );
  require_length( x, k + 1u, "p2_nonsys_encode" );
  bit_backend b;
  auto const bits = unpack( x );
  return pack( kernels::p2_nonsys( b, std::span<std::uint8_t const>( bits ), k ) );
}

bit_vec p3_parities( bit_vec const& x, unsigned k )
{
  require_k( k, 1u, "p3_parities" );
  require_length( x, std::size_t{ 1 } << k, "p3_parities" );
  bit_backend b;
  auto const bits = unpack( x );
  return pack( kernels::p3( b, std::span<std::uint8_t const>( bits ) ) );
}

bit_vec p4_parities( bit_vec const& x, unsigned k )
{
  require_k( k, 1u, "p4_parities" );
  require_length( x, std::size_t{ 1 } << k, "p4_parities" );
  bit_backend b;
  auto const bits = unpack( x );
  return pack( kernels::p4( b, std::span<std::uint8_t const>( bits ) ) );
}

bit_vec assemble_hamming_input( bit_vec const& msg, unsigned k )
{
  require_k( k, 2u, "assemble_hamming_input" );
  require_length( msg, hamming_message_length( k ), "assemble_hamming_input" );
  std::size_t const n = std::size_t{ 1 } << k;
  bit_vec x( n );
  std::size_t m = 0;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( !is_parity_slot( i ) )
    {
      if ( msg[m++] )
      {
        x.set( i );
      }
    }
  }
  return x;
}

bit_vec hamming_codeword( bit_vec const& msg, unsigned k )
{
  auto x = assemble_hamming_input( msg, k );
  auto const p = p3_parities( x, k );
  for ( unsigned i = 0; i < k; ++i )
  {
    x.set( std::size_t{ 1 } << i, p[k - 1u - i] );
  }
  return x.slice( 1u, x.size() - 1u );
}

bit_vec ext_hamming_codeword( bit_vec const& msg, unsigned k )
{
  auto x = assemble_hamming_input( msg, k );
  auto const p = p4_parities( x, k );
  for ( unsigned i = 0; i < k; ++i )
  {
    x.set( std::size_t{ 1 } << i, p[k - 1u - i] );
  }
  x.set( 0u, p[k] );
  return x;
}

bit_vec gray_hadamard_encode( bit_vec const& x, unsigned k )
{
  require_k( k, 2u, "gray_hadamard_encode" );
  require_length( x, k, "gray_hadamard_encode" );
  bit_backend b;
  auto const bits = unpack( x );
  return pack( kernels::gray_hadamard( b, std::span<std::uint8_t const>( bits ), k ) );
}

bit_vec gray_punctured_encode( bit_vec const& x, unsigned k )
{
  require_k( k, 2u, "gray_punctured_encode" );
  require_length( x, k + 1u, "gray_punctured_encode" );
  bit_backend b;
  auto const bits = unpack( x );
  return pack( kernels::gray_punctured( b, std::span<std::uint8_t const>( bits ), k ) );
}

bit_vec shortened_encode( bit_vec const& msg, unsigned r )
{
  require_k( r, 2u, "shortened_encode" );
  require_length( msg, std::size_t{ 1 } << r, "shortened_encode" );
  bit_backend b;
  auto const bits = unpack( msg );
  return pack( kernels::shortened( b, std::span<std::uint8_t const>( bits ), r ) );
}

bit_vec shortened_codeword( bit_vec const& msg, unsigned r )
{
  return msg.concat( shortened_encode( msg, r ) );
}

std::string_view encoder_name( encoder_kind kind )
{
  switch ( kind )
  {
  case encoder_kind::p1:
    return "p1";
  case encoder_kind::p2:
    return "p2";
  case encoder_kind::p2_nonsys:
    return "p2-nonsys";
  case encoder_kind::p3:
    return "p3";
  case encoder_kind::p4:
    return "p4";
  case encoder_kind::gray_hadamard:
    return "gray-hadamard";
  case encoder_kind::gray_punctured:
    return "gray-punctured";
  case encoder_kind::shortened:
    return "shortened";
  }
  return "unknown";
}

circuit trace( encoder_kind kind, unsigned k )
{
  using span = std::span<node_id const>;

  auto label_all = []( circuit& c, std::vector<node_id> const& nodes, char prefix, std::size_t first ) {
    for ( std::size_t i = 0; i < nodes.size(); ++i )
    {
      c.add_output( nodes[i], std::string( 1, prefix ) + std::to_string( first + i ) );
    }
  };
  auto identity_inputs = []( circuit const& c ) {
    std::vector<node_id> x( c.num_inputs() );
    for ( std::uint32_t i = 0; i < c.num_inputs(); ++i )
    {
      x[i] = c.input( i );
    }
    return x;
  };

  switch ( kind )
  {
  case encoder_kind::p1:
  case encoder_kind::p2:
  case encoder_kind::p2_nonsys:
  case encoder_kind::gray_hadamard:
  case encoder_kind::gray_punctured:
  {
    bool const plain = kind == encoder_kind::p1 || kind == encoder_kind::gray_hadamard;
    bool const gray = kind == encoder_kind::gray_hadamard || kind == encoder_kind::gray_punctured;
    require_k( k, gray ? 2u : 1u, "trace" );
    circuit c( plain ? k : k + 1u );
    trace_backend b{ &c };
    auto const x = identity_inputs( c );
    std::vector<node_id> y;
    switch ( kind )
    {
    case encoder_kind::p1:
      y = kernels::p1( b, span( x ), k );
      break;
    case encoder_kind::p2:
      y = kernels::p2( b, span( x ), k );
      break;
    case encoder_kind::p2_nonsys:
      y = kernels::p2_nonsys( b, span( x ), k );
      break;
    case encoder_kind::gray_hadamard:
      y = kernels::gray_hadamard( b, span( x ), k );
      break;
    default:
      y = kernels::gray_punctured( b, span( x ), k );
      break;
    }
    label_all( c, y, 'y', 0u );
    return c;
  }
  case encoder_kind::p3:
  case encoder_kind::p4:
  {
    require_k( k, 2u, "trace" );
    std::size_t const n = std::size_t{ 1 } << k;
    circuit c( static_cast<std::uint32_t>( hamming_message_length( k ) ) );
    trace_backend b{ &c };
    std::vector<node_id> x( n );
    std::uint32_t m = 0;
    for ( std::size_t i = 0; i < n; ++i )
    {
      x[i] = is_parity_slot( i ) ? c.create_zero() : c.input( m++ );
    }
    auto const p = kind == encoder_kind::p3 ? kernels::p3( b, span( x ) ) : kernels::p4( b, span( x ) );
    label_all( c, p, 'p', 1u );
    return c;
  }
  case encoder_kind::shortened:
  {
    require_k( k, 2u, "trace" );
    circuit c( std::uint32_t{ 1 } << k );
    trace_backend b{ &c };
    auto const x = identity_inputs( c );
    label_all( c, kernels::shortened( b, span( x ), k ), 'p', 0u );
    return c;
  }
  }
  throw parameter_error( "unknown encoder" );
}

} // namespace xorlin
