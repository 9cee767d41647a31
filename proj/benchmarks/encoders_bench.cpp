#include <xorlin/bounds.hpp>
#include <xorlin/circuit.hpp>
#include <xorlin/codes.hpp>
#include <xorlin/encoders.hpp>
#include <xorlin/gf2.hpp>

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

namespace
{

xorlin::bit_vec random_message( std::size_t length, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  xorlin::bit_vec v( length );
  for ( std::size_t i = 0; i < length; ++i )
  {
    v.set( i, rng() & 1u );
  }
  return v;
}

void bm_p1( benchmark::State& state )
{
  auto const k = static_cast<unsigned>( state.range( 0 ) );
  auto const msg = random_message( k, 1u );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( xorlin::p1_encode( msg, k ) );
  }
  state.SetItemsProcessed( state.iterations() );
}
BENCHMARK( bm_p1 )->DenseRange( 4, 16, 4 );

void bm_naive_hadamard( benchmark::State& state )
{
  auto const k = static_cast<unsigned>( state.range( 0 ) );
  auto const g = xorlin::family_generator( { xorlin::code_tag::hadamard, k } );
  auto const msg = random_message( k, 1u );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( xorlin::naive_encode( g, msg ) );
  }
  state.SetItemsProcessed( state.iterations() );
}
BENCHMARK( bm_naive_hadamard )->DenseRange( 4, 16, 4 );

void bm_hamming( benchmark::State& state )
{
  auto const k = static_cast<unsigned>( state.range( 0 ) );
  auto const msg = random_message( ( std::size_t{ 1 } << k ) - k - 1u, 2u );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( xorlin::hamming_codeword( msg, k ) );
  }
  state.SetItemsProcessed( state.iterations() );
}
BENCHMARK( bm_hamming )->DenseRange( 4, 12, 4 );

void bm_shortened( benchmark::State& state )
{
  auto const r = static_cast<unsigned>( state.range( 0 ) );
  auto const msg = random_message( std::size_t{ 1 } << r, 3u );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( xorlin::shortened_codeword( msg, r ) );
  }
  state.SetItemsProcessed( state.iterations() );
}
BENCHMARK( bm_shortened )->DenseRange( 3, 9, 3 );

void bm_trace_optimize( benchmark::State& state )
{
  auto const k = static_cast<unsigned>( state.range( 0 ) );
  for ( auto _ : state )
  {
    auto c = xorlin::optimize( xorlin::trace( xorlin::encoder_kind::p4, k ) );
    benchmark::DoNotOptimize( c.num_xors() );
  }
}
BENCHMARK( bm_trace_optimize )->DenseRange( 4, 10, 3 );

void bm_search( benchmark::State& state )
{
  auto const k = static_cast<unsigned>( state.range( 0 ) );
  auto const targets = xorlin::search_targets( { xorlin::code_tag::hamming, k } );
  xorlin::search_budget const budget{ 32u, 60.0 };
  for ( auto _ : state )
  {
    auto const r = xorlin::slp_min_search( targets, static_cast<unsigned>( targets.front().size() ), budget );
    benchmark::DoNotOptimize( r.explored );
  }
}
BENCHMARK( bm_search )->Arg( 3 )->Unit( benchmark::kMillisecond );

} // namespace

BENCHMARK_MAIN();
