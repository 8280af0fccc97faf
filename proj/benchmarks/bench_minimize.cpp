#include <cffmin/adjacency.hpp>
#include <cffmin/datagen.hpp>
#include <cffmin/floodfill.hpp>
#include <cffmin/oracle.hpp>

#include <benchmark/benchmark.h>

#include <cstdint>

using namespace cffmin;

namespace
{

/* densities are passed in parts per thousand */
truth_function instance( benchmark::State const& state )
{
  return generate( { .n = static_cast<uint32_t>( state.range( 0 ) ),
                     .density = static_cast<double>( state.range( 1 ) ) / 1000.0,
                     .seed = 1u } );
}

void BM_minimize( benchmark::State& state )
{
  auto const f = instance( state );
  std::size_t cubes = 0u;
  for ( auto _ : state )
  {
    auto const cv = minimize( f );
    cubes = cv.size();
    benchmark::DoNotOptimize( cubes );
  }
  state.counters["ones"] = static_cast<double>( f.num_ones() );
  state.counters["cubes"] = static_cast<double>( cubes );
  state.SetItemsProcessed( static_cast<int64_t>( state.iterations() * f.num_ones() ) );
}
BENCHMARK( BM_minimize )
    ->ArgsProduct( { { 10, 12, 14 }, { 500, 100, 10 } } )
    ->ArgsProduct( { { 16, 18, 20, 22 }, { 1 } } )
    ->Unit( benchmark::kMillisecond );

void BM_build_index( benchmark::State& state )
{
  auto const f = instance( state );
  for ( auto _ : state )
  {
    auto idx = build_index( f );
    benchmark::DoNotOptimize( idx );
  }
  state.SetItemsProcessed( static_cast<int64_t>( state.iterations() * f.num_ones() ) );
}
BENCHMARK( BM_build_index )->ArgsProduct( { { 12, 16, 20 }, { 100 } } )->Unit( benchmark::kMicrosecond );

void BM_equivalent( benchmark::State& state )
{
  auto const f = instance( state );
  auto const cv = minimize( f );
  for ( auto _ : state )
  {
    auto r = equivalent( f, cv );
    benchmark::DoNotOptimize( r );
  }
}
BENCHMARK( BM_equivalent )->ArgsProduct( { { 12, 16, 20 }, { 100 } } )->Unit( benchmark::kMicrosecond );

void BM_minimum_cover( benchmark::State& state )
{
  auto const f = instance( state );
  for ( auto _ : state )
  {
    auto cv = qm_minimum_cover( f );
    benchmark::DoNotOptimize( cv );
  }
}
BENCHMARK( BM_minimum_cover )->ArgsProduct( { { 6, 8, 9 }, { 500, 100 } } )->Unit( benchmark::kMillisecond );

} // namespace

BENCHMARK_MAIN();
