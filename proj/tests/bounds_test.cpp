#include "oracles.hpp"

#include <xorlin/bounds.hpp>
#include <xorlin/errors.hpp>

#include <doctest.h>

#include <random>

using namespace xorlin;

namespace
{

/* every target is reproduced on all 2^n assignments */
void check_solution( search_result const& r, std::vector<bit_vec> const& targets, unsigned n )
{
  REQUIRE( r.outcome == search_outcome::found );
  REQUIRE( r.solution );
  REQUIRE( r.solution->num_outputs() == targets.size() );
  for ( std::uint64_t a = 0; a < ( std::uint64_t{ 1 } << n ); ++a )
  {
    auto const x = t_bin( a, n );
    auto const y = evaluate( *r.solution, x );
    for ( std::size_t t = 0; t < targets.size(); ++t )
    {
      CHECK( y[t] == x.dot( targets[t] ) );
    }
  }
}

search_budget quick()
{
  return { 12u, 30.0 };
}

} // namespace

TEST_CASE( "lower bounds" )
{
  CHECK( lower_bound( { code_tag::hamming, 3 } ) == 5u );
  CHECK( lower_bound( { code_tag::hamming, 2 } ) == 0u );
  CHECK( lower_bound( { code_tag::systematic_punctured_hadamard, 3 } ) == 6u );
  CHECK( lower_bound( { code_tag::hadamard, 3 } ) == 4u );
  CHECK( lower_bound( { code_tag::punctured_hadamard, 3 } ) == 7u );
  CHECK( lower_bound( { code_tag::extended_hamming, 3 } ) == 6u );
  CHECK_FALSE( lower_bound( { code_tag::shortened_hamming, 3 } ) );
  CHECK_THROWS_AS( lower_bound( { code_tag::hamming, 1 } ), parameter_error );
}

TEST_CASE( "search on small target sets" )
{
  std::vector<bit_vec> parity{ bit_vec::from_string( "111" ) };
  auto const r = slp_min_search( parity, 3, quick() );
  CHECK( r.solution->num_xors() == 2u );
  check_solution( r, parity, 3 );

  std::vector<bit_vec> units{ bit_vec::from_string( "010" ), bit_vec::from_string( "100" ) };
  auto const u = slp_min_search( units, 3, quick() );
  CHECK( u.solution->num_xors() == 0u );
  check_solution( u, units, 3 );

  std::vector<bit_vec> hadamard2{ bit_vec::from_string( "01" ), bit_vec::from_string( "10" ), bit_vec::from_string( "11" ) };
  auto const h = slp_min_search( hadamard2, 2, quick() );
  CHECK( h.solution->num_xors() == 1u );
  check_solution( h, hadamard2, 2 );

  CHECK_THROWS_AS( slp_min_search( std::vector<bit_vec>{ bit_vec( 3 ) }, 3, quick() ), precondition_error );
  CHECK_THROWS_AS( slp_min_search( std::vector<bit_vec>{ bit_vec( 2 ) }, 3, quick() ), precondition_error );
}

TEST_CASE( "search reports when the budget is too small" )
{
  std::vector<bit_vec> parity{ bit_vec::from_string( "11111" ) };
  auto const r = slp_min_search( parity, 5, { 3u, 30.0 } );
  CHECK( r.outcome == search_outcome::proven_above );
  CHECK_FALSE( r.solution );
}

TEST_CASE( "search agrees with brute force on random target sets" )
{
  std::mt19937_64 rng( 21 );
  for ( int trial = 0; trial < 30; ++trial )
  {
    unsigned const n = 3u + static_cast<unsigned>( rng() % 2u );
    std::vector<bit_vec> targets;
    for ( int t = 0; t < 3; ++t )
    {
      bit_vec v( n );
      while ( v.none() )
      {
        v = oracle::random_vec( rng, n );
      }
      targets.push_back( v );
    }
    auto const r = slp_min_search( targets, n, quick() );
    check_solution( r, targets, n );
    if ( r.solution->num_xors() > 0u )
    {
      /* no solution one gate shorter */
      auto const shorter = slp_min_search( targets, n, { r.solution->num_xors() - 1u, 30.0 } );
      CHECK( shorter.outcome == search_outcome::proven_above );
    }
  }
}

TEST_CASE( "search is deterministic" )
{
  auto const targets = search_targets( { code_tag::hamming, 3 } );
  auto const a = slp_min_search( targets, 4, quick() );
  auto const b = slp_min_search( targets, 4, quick() );
  CHECK( a.explored == b.explored );
  CHECK( *a.solution == *b.solution );
}

TEST_CASE( "search targets" )
{
  CHECK( search_targets( { code_tag::hadamard, 2 } ).size() == 1u );
  CHECK( search_targets( { code_tag::hadamard, 3 } ).size() == 4u );
  CHECK( search_targets( { code_tag::punctured_hadamard, 2 } ).size() == 3u );
  CHECK( search_targets( { code_tag::systematic_punctured_hadamard, 3 } ).size() == 4u );
  CHECK( search_targets( { code_tag::hamming, 2 } ).empty() );
  CHECK( search_targets( { code_tag::hamming, 3 } ).size() == 3u );
  CHECK( search_targets( { code_tag::extended_hamming, 3 } ).size() == 4u );
}

TEST_CASE( "tightness reports" )
{
  auto const sp = verify_tightness( { code_tag::systematic_punctured_hadamard, 2 }, quick(), true );
  CHECK( sp.to_string() == "lower=2 achieved=2 searched=2 tight=yes" );
  CHECK( sp.consistent() );

  auto const h = verify_tightness( { code_tag::hamming, 2 }, quick(), true );
  CHECK( h.to_string() == "lower=0 achieved=0 searched=0 tight=yes" );

  auto const p = verify_tightness( { code_tag::punctured_hadamard, 2 }, quick(), true );
  CHECK( p.to_string() == "lower=3 achieved=3 searched=3 tight=yes" );

  auto const skip = verify_tightness( { code_tag::extended_hamming, 5 }, quick(), false );
  CHECK( skip.to_string() == "lower=50 achieved=50 searched=skipped tight=yes" );

  auto const s = verify_tightness( { code_tag::shortened_hamming, 3 }, quick(), false );
  CHECK( s.to_string() == "lower=unknown achieved=15 searched=skipped tight=no" );
  CHECK( s.consistent() );
}

TEST_CASE( "achieved sizes meet the bounds up to k = 16" )
{
  for ( auto tag : { code_tag::hadamard, code_tag::punctured_hadamard, code_tag::systematic_punctured_hadamard,
                     code_tag::hamming, code_tag::extended_hamming } )
  {
    for ( unsigned k = 2; k <= 16; ++k )
    {
      auto const r = verify_tightness( { tag, k }, quick(), false );
      CHECK( r.achieved == *r.lower );
    }
  }
}
