#include <xorlin/codes.hpp>
#include <xorlin/errors.hpp>

#include <array>
#include <bit>
#include <string>
#include <utility>

namespace xorlin
{

namespace
{

void require_parameter( unsigned k, unsigned min, char const* what )
{
  if ( k < min || k > max_family_parameter )
  {
    throw parameter_error( std::string( what ) + " requires parameter in [" + std::to_string( min ) + ", " +
                           std::to_string( max_family_parameter ) + "], got " + std::to_string( k ) );
  }
}

bool is_power_of_two( std::uint64_t x )
{
  return std::has_single_bit( x );
}

constexpr std::array<std::pair<code_tag, std::string_view>, 6> family_names{ {
    { code_tag::hadamard, "hadamard" },
    { code_tag::punctured_hadamard, "punct-hadamard" },
    { code_tag::systematic_punctured_hadamard, "sys-punct-hadamard" },
    { code_tag::hamming, "hamming" },
    { code_tag::extended_hamming, "ext-hamming" },
    { code_tag::shortened_hamming, "shortened-hamming" },
} };

} // namespace

std::string_view family_name( code_tag tag )
{
  for ( auto const& [t, name] : family_names )
  {
    if ( t == tag )
    {
      return name;
    }
  }
  return "unknown";
}

std::optional<code_tag> parse_family( std::string_view name )
{
  for ( auto const& [t, n] : family_names )
  {
    if ( n == name )
    {
      return t;
    }
  }
  return std::nullopt;
}

bit_matrix gen_hadamard( unsigned k )
{
  require_parameter( k, 1u, "gen_hadamard" );
  std::size_t const n = std::size_t{ 1 } << k;
  bit_matrix g( k, n );
  for ( std::size_t j = 0; j < n; ++j )
  {
    for ( unsigned r = 0; r < k; ++r )
    {
      if ( ( j >> ( k - 1u - r ) ) & 1u )
      {
        g.set( r, j );
      }
    }
  }
  return g;
}

bit_matrix gen_punctured( unsigned k )
{
  require_parameter( k, 1u, "gen_punctured" );
  return gen_hadamard( k ).stack( bit_matrix::from_rows( { ~bit_vec( std::size_t{ 1 } << k ) } ) );
}

bit_vec e_vector( unsigned k )
{
  require_parameter( k, 0u, "e_vector" );
  std::size_t const n = std::size_t{ 1 } << k;
  bit_vec e( n );
  for ( std::size_t j = 0; j < n; ++j )
  {
    if ( ( std::popcount( j ) & 1 ) == 0 )
    {
      e.set( j );
    }
  }
  return e;
}

bit_matrix v_matrix( unsigned k )
{
  require_parameter( k, 1u, "v_matrix" );
  bit_matrix v( k + 1u, k + 1u );
  for ( unsigned i = 0; i < k; ++i )
  {
    v.set( i, i );
  }
  for ( unsigned i = 0; i <= k; ++i )
  {
    v.set( k, i );
  }
  return v;
}

bit_matrix gen_systematic_punctured( unsigned k )
{
  require_parameter( k, 1u, "gen_systematic_punctured" );
  return gen_hadamard( k ).stack( bit_matrix::from_rows( { e_vector( k ) } ) );
}

bit_matrix pcm_hamming( unsigned k )
{
  require_parameter( k, 2u, "pcm_hamming" );
  std::size_t const n = ( std::size_t{ 1 } << k ) - 1u;
  bit_matrix h( k, n );
  for ( std::size_t j = 0; j < n; ++j )
  {
    auto const value = j + 1u;
    for ( unsigned r = 0; r < k; ++r )
    {
      if ( ( value >> ( k - 1u - r ) ) & 1u )
      {
        h.set( r, j );
      }
    }
  }
  return h;
}

bit_matrix pcm_ext_hamming( unsigned k )
{
  require_parameter( k, 2u, "pcm_ext_hamming" );
  auto const h = pcm_hamming( k );
  std::size_t const n = std::size_t{ 1 } << k;
  bit_matrix result( k + 1u, n );
  for ( unsigned r = 0; r < k; ++r )
  {
    for ( std::size_t j = 1; j < n; ++j )
    {
      result.set( r, j, h.get( r, j - 1u ) );
    }
  }
  for ( std::size_t j = 0; j < n; ++j )
  {
    result.set( k, j );
  }
  return result;
}

bit_matrix pcm_systematic_ext_hamming( unsigned k )
{
  require_parameter( k, 2u, "pcm_systematic_ext_hamming" );
  auto const top = pcm_ext_hamming( k );
  std::vector<bit_vec> rows;
  for ( unsigned r = 0; r < k; ++r )
  {
    rows.push_back( top.row( r ) );
  }
  rows.push_back( e_vector( k ) );
  return bit_matrix::from_rows( std::move( rows ) );
}

bit_matrix pcm_shortened( unsigned r )
{
  require_parameter( r, 2u, "pcm_shortened" );
  std::size_t const m = std::size_t{ 1 } << r;
  std::vector<bit_vec> columns;
  columns.reserve( m + r + 1u );
  columns.push_back( t_bin( m - 1u, r + 1u ) );
  for ( std::size_t i = 1; i < m; ++i )
  {
    columns.push_back( t_bin( m + i, r + 1u ) );
  }
  for ( unsigned i = 0; i <= r; ++i )
  {
    columns.push_back( t_bin( std::uint64_t{ 1 } << i, r + 1u ) );
  }
  return bit_matrix::from_columns( columns, r + 1u );
}

std::vector<std::size_t> hamming_parity_positions( unsigned k )
{
  require_parameter( k, 2u, "hamming_parity_positions" );
  std::vector<std::size_t> positions;
  for ( unsigned i = 0; i < k; ++i )
  {
    positions.push_back( ( std::size_t{ 1 } << i ) - 1u );
  }
  return positions;
}

bit_matrix gen_hamming( unsigned k )
{
  require_parameter( k, 2u, "gen_hamming" );
  std::size_t const n = ( std::size_t{ 1 } << k ) - 1u;
  std::vector<bit_vec> rows;
  rows.reserve( n - k );
  for ( std::size_t c = 1; c <= n; ++c )
  {
    if ( is_power_of_two( c ) )
    {
      continue;
    }
    bit_vec row( n );
    row.set( c - 1u );
    for ( unsigned i = 0; i < k; ++i )
    {
      if ( ( c >> i ) & 1u )
      {
        row.set( ( std::size_t{ 1 } << i ) - 1u );
      }
    }
    rows.push_back( std::move( row ) );
  }
  return bit_matrix::from_rows( std::move( rows ) );
}

bit_matrix gen_ext_hamming( unsigned k )
{
  require_parameter( k, 2u, "gen_ext_hamming" );
  std::size_t const n = std::size_t{ 1 } << k;
  std::vector<bit_vec> rows;
  rows.reserve( n - k - 1u );
  for ( std::size_t c = 1; c < n; ++c )
  {
    if ( is_power_of_two( c ) )
    {
      continue;
    }
    bit_vec row( n );
    row.set( c );
    for ( unsigned i = 0; i < k; ++i )
    {
      if ( ( c >> i ) & 1u )
      {
        row.set( std::size_t{ 1 } << i );
      }
    }
    /* overall parity: x_c appears once directly and once per set bit */
    if ( ( std::popcount( c ) & 1 ) == 0 )
    {
      row.set( 0u );
    }
    rows.push_back( std::move( row ) );
  }
  return bit_matrix::from_rows( std::move( rows ) );
}

bit_matrix gen_shortened( unsigned r )
{
  require_parameter( r, 2u, "gen_shortened" );
  std::size_t const m = std::size_t{ 1 } << r;
  std::vector<bit_vec> rows;
  rows.reserve( m );
  for ( std::size_t i = 0; i < m; ++i )
  {
    auto const value = i == 0u ? m - 1u : m + i;
    bit_vec row( m + r + 1u );
    row.set( i );
    for ( unsigned b = 0; b <= r; ++b )
    {
      if ( ( value >> b ) & 1u )
      {
        row.set( m + b );
      }
    }
    rows.push_back( std::move( row ) );
  }
  return bit_matrix::from_rows( std::move( rows ) );
}

bit_matrix gray_gen( unsigned k )
{
  require_parameter( k, 2u, "gray_gen" );
  std::size_t const n = std::size_t{ 1 } << k;
  std::vector<bit_vec> columns;
  columns.reserve( n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    columns.push_back( t_bin( brgc( i ), k ) );
  }
  return bit_matrix::from_columns( columns, k );
}

bit_matrix gray_systematic_gen( unsigned k )
{
  require_parameter( k, 2u, "gray_systematic_gen" );
  std::size_t const n = std::size_t{ 1 } << k;
  /* brgc(i) has odd weight exactly when i is odd */
  bit_vec alternating( n );
  for ( std::size_t i = 0; i < n; i += 2u )
  {
    alternating.set( i );
  }
  return gray_gen( k ).stack( bit_matrix::from_rows( { std::move( alternating ) } ) );
}

bit_vec naive_encode( bit_matrix const& g, bit_vec const& x )
{
  return vec_mat_mul( x, g );
}

std::size_t min_distance( bit_matrix const& g )
{
  if ( g.rows() > max_distance_rows )
  {
    throw budget_error( "min_distance enumerates 2^rows codewords; " + std::to_string( g.rows() ) +
                        " rows exceed the limit of " + std::to_string( max_distance_rows ) );
  }
  if ( g.rows() == 0u )
  {
    throw precondition_error( "min_distance of a code without messages" );
  }
  /* walk the messages in Gray order so each step adds a single row */
  std::size_t best = g.cols() + 1u;
  bit_vec word( g.cols() );
  std::uint64_t const count = std::uint64_t{ 1 } << g.rows();
  for ( std::uint64_t i = 1; i < count; ++i )
  {
    word ^= g.row( static_cast<std::size_t>( std::countr_zero( i ) ) );
    auto const w = word.weight();
    if ( w < best )
    {
      best = w;
    }
  }
  return best;
}

bit_matrix family_generator( code_family family )
{
  switch ( family.tag )
  {
  case code_tag::hadamard:
    return gen_hadamard( family.k );
  case code_tag::punctured_hadamard:
    return gen_punctured( family.k );
  case code_tag::systematic_punctured_hadamard:
    return gen_systematic_punctured( family.k );
  case code_tag::hamming:
    return gen_hamming( family.k );
  case code_tag::extended_hamming:
    return gen_ext_hamming( family.k );
  case code_tag::shortened_hamming:
    return gen_shortened( family.k );
  }
  throw parameter_error( "unknown code family" );
}

std::optional<bit_matrix> family_check_matrix( code_family family )
{
  switch ( family.tag )
  {
  case code_tag::hadamard:
    if ( family.k < 2u )
    {
      return std::nullopt;
    }
    /* dual of the Hadamard code: extended Hamming code plus the null position */
    return gen_ext_hamming( family.k ).stack( bit_matrix::from_rows( { bit_vec::unit( std::size_t{ 1 } << family.k, 0u ) } ) );
  case code_tag::punctured_hadamard:
  case code_tag::systematic_punctured_hadamard:
    if ( family.k < 2u )
    {
      return std::nullopt;
    }
    return gen_ext_hamming( family.k );
  case code_tag::hamming:
    return pcm_hamming( family.k );
  case code_tag::extended_hamming:
    return pcm_ext_hamming( family.k );
  case code_tag::shortened_hamming:
    return pcm_shortened( family.k );
  }
  return std::nullopt;
}

} // namespace xorlin
