#include "cproof/checker.hpp"
#include "cproof/corpus.hpp"
#include "cproof/generate.hpp"
#include "cproof/oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cproof;

static void BM_PolyHydra( benchmark::State& state )
{
    const auto document = *corpus_entry( "2-hydra" );
    for ( auto _ : state )
        benchmark::DoNotOptimize( check_poly( document ) );
}
BENCHMARK( BM_PolyHydra )->Unit( benchmark::kMicrosecond );

static void BM_OracleHydra( benchmark::State& state )
{
    const auto document = *corpus_entry( "2-hydra" );
    for ( auto _ : state )
        benchmark::DoNotOptimize( check_gtc( document ) );
}
BENCHMARK( BM_OracleHydra )->Unit( benchmark::kMillisecond );

static void BM_PolyChainedCycles( benchmark::State& state )
{
    const auto document = chained_cycles( static_cast< std::size_t >( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( check_poly( document ) );
    state.SetComplexityN( state.range( 0 ) );
}
BENCHMARK( BM_PolyChainedCycles )
        ->RangeMultiplier( 2 )
        ->Range( 8, 512 )
        ->Unit( benchmark::kMicrosecond )
        ->Complexity();

static void BM_OracleChainedCycles( benchmark::State& state )
{
    const auto document = chained_cycles( static_cast< std::size_t >( state.range( 0 ) ) );
    InclusionLimits limits;
    limits.state_bound = 10000;
    for ( auto _ : state )
        benchmark::DoNotOptimize( check_gtc( document, limits ) );
    state.SetComplexityN( state.range( 0 ) );
}
BENCHMARK( BM_OracleChainedCycles )->DenseRange( 2, 12, 2 )->Unit( benchmark::kMillisecond );

static void BM_CertificateReplay( benchmark::State& state )
{
    const auto document = chained_cycles( static_cast< std::size_t >( state.range( 0 ) ) );
    const auto certificate = *check_poly( document ).certificate;
    for ( auto _ : state )
        benchmark::DoNotOptimize( verify_certificate( document, certificate ) );
}
BENCHMARK( BM_CertificateReplay )->RangeMultiplier( 4 )->Range( 8, 512 )->Unit( benchmark::kMicrosecond );

static void BM_PolyRandom( benchmark::State& state )
{
    std::mt19937_64 rng( 42 );
    RandomOptions options;
    options.max_nodes = static_cast< std::size_t >( state.range( 0 ) );
    std::vector< ProofDocument > documents;
    for ( int i = 0; i < 64; ++i )
        documents.push_back( random_preproof( rng, options ) );
    std::size_t i = 0;
    for ( auto _ : state )
        benchmark::DoNotOptimize( check_poly( documents[ i++ % documents.size() ] ) );
}
BENCHMARK( BM_PolyRandom )->Arg( 8 )->Arg( 16 )->Arg( 32 )->Unit( benchmark::kMicrosecond );
BENCHMARK_MAIN();
