#include "oracles.hpp"

#include <xorlin/codes.hpp>
#include <xorlin/errors.hpp>
#include <xorlin/gf2.hpp>

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

using namespace xorlin;

namespace
{

std::vector<bit_vec> columns( bit_matrix const& m )
{
  std::vector<bit_vec> out;
  for ( std::size_t c = 0; c < m.cols(); ++c )
  {
    out.push_back( m.column( c ) );
  }
  return out;
}

std::set<std::size_t> checked_positions( bit_matrix const& h, std::size_t row, std::size_t message_columns )
{
  std::set<std::size_t> out;
  for ( std::size_t c = 0; c < message_columns; ++c )
  {
    if ( h.get( row, c ) )
    {
      out.insert( c );
    }
  }
  return out;
}

std::set<std::size_t> range( std::size_t first, std::size_t last )
{
  std::set<std::size_t> out;
  for ( auto i = first; i <= last; ++i )
  {
    out.insert( i );
  }
  return out;
}

} // namespace

TEST_CASE( "Hadamard generators" )
{
  CHECK( gen_hadamard( 1 ).to_string() == "01\n" );
  CHECK( gen_hadamard( 3 ).to_string() == "00001111\n00110011\n01010101\n" );
  for ( unsigned k = 1; k <= 12; ++k )
  {
    auto const g = gen_hadamard( k );
    CHECK( g.column( 0 ).none() );
    for ( std::size_t j = 0; j < g.cols(); ++j )
    {
      CHECK( from_bin( g.column( j ) ) == j );
    }
  }
  CHECK_THROWS_AS( gen_hadamard( 0 ), parameter_error );

  CHECK( gen_punctured( 3 ).to_string() == "00001111\n00110011\n01010101\n11111111\n" );
  for ( unsigned k = 2; k <= 10; ++k )
  {
    CHECK( gen_punctured( k ).row( k ).weight() == std::size_t{ 1 } << k );
    CHECK( gen_punctured( k ) == pcm_ext_hamming( k ) );
  }
}

TEST_CASE( "systematic punctured Hadamard generator" )
{
  CHECK( e_vector( 0 ).to_string() == "1" );
  CHECK( e_vector( 1 ).to_string() == "10" );
  CHECK( e_vector( 3 ).to_string() == "10010110" );
  CHECK( v_matrix( 3 ).to_string() == "1000\n0100\n0010\n1111\n" );
  CHECK( gen_systematic_punctured( 3 ).to_string() == "00001111\n00110011\n01010101\n10010110\n" );
  for ( unsigned k = 1; k <= 10; ++k )
  {
    CHECK( e_vector( k ).weight() == std::size_t{ 1 } << ( k - 1u ) );
    CHECK( e_vector( k ) == e_vector( k - 1u ).concat( ~e_vector( k - 1u ) ) );
  }
  for ( unsigned k = 2; k <= 10; ++k )
  {
    auto const g = gen_systematic_punctured( k );
    CHECK( mat_mul( v_matrix( k ), gen_punctured( k ) ) == g );
    CHECK( pcm_systematic_ext_hamming( k ) == g );
    for ( auto const& c : columns( g ) )
    {
      CHECK( c.parity() );
    }
  }
}

TEST_CASE( "Hamming check matrices" )
{
  CHECK( pcm_hamming( 3 ).to_string() == "0001111\n0110011\n1010101\n" );
  CHECK_THROWS_AS( pcm_hamming( 1 ), parameter_error );
  for ( unsigned k = 2; k <= 10; ++k )
  {
    auto const h = pcm_hamming( k );
    std::set<bit_vec> distinct;
    for ( auto const& c : columns( h ) )
    {
      CHECK( c.any() );
      distinct.insert( c );
    }
    CHECK( distinct.size() == h.cols() );
    for ( std::size_t r = 0; r < h.rows(); ++r )
    {
      CHECK( h.row( r ).weight() == std::size_t{ 1 } << ( k - 1u ) );
    }
  }
  auto const ext = pcm_ext_hamming( 3 );
  CHECK( ext.column( 0 ).to_string() == "0001" );
  CHECK( ext == gen_punctured( 3 ) );

  for ( unsigned k = 2; k <= 10; ++k )
  {
    auto const h = pcm_systematic_ext_hamming( k );
    auto const top = pcm_hamming( k );
    for ( unsigned r = 0; r < k; ++r )
    {
      CHECK_FALSE( h.get( r, 0 ) );
      for ( std::size_t c = 1; c < h.cols(); ++c )
      {
        CHECK( h.get( r, c ) == top.get( r, c - 1u ) );
      }
    }
    CHECK( h.row( k ) == e_vector( k ) );
  }
}

TEST_CASE( "Hamming generators are orthogonal to their check matrices" )
{
  for ( unsigned k = 2; k <= 8; ++k )
  {
    CHECK( mat_mul( pcm_hamming( k ), gen_hamming( k ).transpose() ) == bit_matrix( k, gen_hamming( k ).rows() ) );
    CHECK( mat_mul( pcm_ext_hamming( k ), gen_ext_hamming( k ).transpose() ) == bit_matrix( k + 1u, gen_ext_hamming( k ).rows() ) );
  }
  for ( unsigned r = 2; r <= 8; ++r )
  {
    CHECK( mat_mul( pcm_shortened( r ), gen_shortened( r ).transpose() ) == bit_matrix( r + 1u, std::size_t{ 1 } << r ) );
  }
}

TEST_CASE( "shortened check matrix" )
{
  auto const h3 = pcm_shortened( 3 );
  CHECK( h3.rows() == 4u );
  CHECK( h3.cols() == 12u );
  std::set<bit_vec> distinct;
  for ( auto const& c : columns( h3 ) )
  {
    CHECK( c.any() );
    distinct.insert( c );
  }
  CHECK( distinct.size() == 12u );
  CHECK_THROWS_AS( pcm_shortened( 1 ), parameter_error );

  /* parity p_j sits in row r - j */
  auto const h5 = pcm_shortened( 5 );
  std::set<std::size_t> p0{ 0 };
  for ( std::size_t i = 1; i <= 31; i += 2 )
  {
    p0.insert( i );
  }
  CHECK( checked_positions( h5, 5, 32 ) == p0 );
  CHECK( checked_positions( h5, 0, 32 ) == range( 1, 31 ) );
  for ( unsigned i = 0; i <= 5; ++i )
  {
    CHECK( h5.column( 32u + i ) == t_bin( std::uint64_t{ 1 } << i, 6 ) );
  }
}

TEST_CASE( "Gray-ordered generators" )
{
  CHECK( gray_gen( 3 ).to_string() == "00001111\n00111100\n01100110\n" );
  CHECK( gray_systematic_gen( 3 ).to_string() == "00001111\n00111100\n01100110\n10101010\n" );
  for ( unsigned k = 2; k <= 12; ++k )
  {
    auto const g = gray_gen( k );
    auto const s = gray_systematic_gen( k );
    for ( std::size_t c = 1; c < g.cols(); ++c )
    {
      CHECK( ( g.column( c ) ^ g.column( c - 1u ) ).weight() == 1u );
      CHECK( ( s.column( c ) ^ s.column( c - 1u ) ).weight() == 2u );
    }
    if ( k <= 10 )
    {
      auto a = columns( g );
      auto b = columns( gen_hadamard( k ) );
      std::sort( a.begin(), a.end() );
      std::sort( b.begin(), b.end() );
      CHECK( a == b );
    }
  }
}

TEST_CASE( "naive encoding" )
{
  auto const g = gen_hadamard( 3 );
  CHECK( naive_encode( g, bit_vec( 3 ) ).none() );
  for ( std::size_t r = 0; r < 3; ++r )
  {
    CHECK( naive_encode( g, bit_vec::unit( 3, r ) ) == g.row( r ) );
  }
  CHECK_THROWS_AS( naive_encode( g, bit_vec( 4 ) ), dimension_error );
}

TEST_CASE( "minimum distance" )
{
  CHECK( min_distance( gen_hadamard( 4 ) ) == 8u );
  CHECK( min_distance( bit_matrix::parse( "1000011\n0100101\n0010110\n0001111\n" ) ) == 3u );
  CHECK( min_distance( gen_hamming( 3 ) ) == 3u );
  CHECK( min_distance( gen_ext_hamming( 3 ) ) == 4u );
  CHECK_THROWS_AS( min_distance( bit_matrix( 21, 4 ) ), budget_error );
}

TEST_CASE( "family names round-trip" )
{
  for ( auto tag : { code_tag::hadamard, code_tag::punctured_hadamard, code_tag::systematic_punctured_hadamard,
                     code_tag::hamming, code_tag::extended_hamming, code_tag::shortened_hamming } )
  {
    CHECK( parse_family( family_name( tag ) ) == tag );
  }
  CHECK_FALSE( parse_family( "golay" ) );
}

TEST_CASE( "family check matrices annihilate family generators" )
{
  for ( auto tag : { code_tag::hadamard, code_tag::punctured_hadamard, code_tag::systematic_punctured_hadamard,
                     code_tag::hamming, code_tag::extended_hamming, code_tag::shortened_hamming } )
  {
    for ( unsigned k = 2; k <= 6; ++k )
    {
      auto const g = family_generator( { tag, k } );
      auto const h = family_check_matrix( { tag, k } );
      REQUIRE( h );
      CHECK( mat_mul( *h, g.transpose() ) == bit_matrix( h->rows(), g.rows() ) );
    }
  }
}
