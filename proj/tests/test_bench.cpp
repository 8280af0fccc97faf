#include <catch2/catch_amalgamated.hpp>

#include <cffmin/bench.hpp>
#include <cffmin/pla.hpp>

#include "helpers.hpp"

#include <random>
#include <sstream>

using namespace cffmin;

TEST_CASE( "sweep grid shape", "[bench]" )
{
  std::vector<uint32_t> const dims = { 10u, 11u, 12u, 13u, 14u, 15u };
  std::vector<double> const densities = { 0.1, 0.2, 0.3, 0.4 };

  CHECK( sweep( dims, densities, 0u, 1u ).empty() );

  auto const records = sweep( dims, densities, 1u, 1u );
  REQUIRE( records.size() == 24u );
  auto it = records.begin();
  for ( auto d : dims )
  {
    for ( auto p : densities )
    {
      CHECK( it->dims == d );
      CHECK( it->density == p );
      CHECK( it->verified );
      CHECK( it->verify_mode == "exhaustive" );
      CHECK( it->gen_mode == "exact" );
      CHECK( it->elapsed_seconds >= 0.0 );
      ++it;
    }
  }
}

TEST_CASE( "sweep instances are reproducible from their recorded seed", "[bench]" )
{
  std::vector<uint32_t> const dims = { 8u };
  std::vector<double> const densities = { 0.3 };
  auto const a = sweep( dims, densities, 3u, 99u );
  auto const b = sweep( dims, densities, 3u, 99u );
  REQUIRE( a.size() == 3u );
  for ( auto i = 0u; i < a.size(); ++i )
  {
    CHECK( a[i].seed == b[i].seed );
    CHECK( a[i].num_literals == b[i].num_literals );
    auto const f = generate( { .n = 8u, .density = 0.3, .seed = a[i].seed } );
    CHECK( literal_count( minimize( f ) ) == a[i].num_literals );
  }
  CHECK( a[0].seed != a[1].seed );
  CHECK( instance_seed( 99u, 8u, 0u, 0u ) == a[0].seed );
}

TEST_CASE( "reduction percentages", "[bench]" )
{
  CHECK( reduction_percent( 2303u, 142u ) == Catch::Approx( 93.8341294 ).epsilon( 1e-9 ) );
  CHECK( reduction_percent( 5435u, 6002u ) == Catch::Approx( -10.4323827 ).epsilon( 1e-9 ) );
  CHECK( reduction_percent( 17u, 17u ) == 0.0 );
  CHECK_THROWS_AS( reduction_percent( 0u, 3u ), std::invalid_argument );
}

TEST_CASE( "consolidation of per-output covers", "[bench]" )
{
  auto const c = parse_sop( "A'C' + A'BD", 4u );
  std::vector<cover> const twice = { c, c };
  CHECK( consolidate_multi( twice, 4u ).cubes == c.cubes );

  std::vector<cover> const single = { c };
  CHECK( consolidate_multi( single, 4u ).cubes == c.cubes );

  /* A'C' splits on D into A'C'D and A'C'D', both present */
  std::vector<cover> const split = { parse_sop( "A'C' + B", 4u ), parse_sop( "A'C'D + A'C'D'", 4u ) };
  auto const merged = consolidate_multi( split, 4u );
  CHECK( merged.cubes == parse_sop( "B + A'C'D + A'C'D'", 4u ).cubes );

  std::vector<cover> const mixed = { c, cover{ .n = 3u } };
  CHECK_THROWS_AS( consolidate_multi( mixed, 4u ), std::invalid_argument );
}

TEST_CASE( "consolidation preserves the union", "[bench][property]" )
{
  std::mt19937_64 rng( 5u );
  for ( auto trial = 0u; trial < 200u; ++trial )
  {
    auto const n = 2u + static_cast<uint32_t>( rng() % 7u );
    std::vector<cover> covers( 1u + rng() % 4u );
    cover all{ .n = n };
    for ( auto& cv : covers )
    {
      cv.n = n;
      auto const cubes = rng() % 8u;
      for ( auto i = 0u; i < cubes; ++i )
      {
        auto const mask = static_cast<coordinate>( rng() ) & universe_mask( n );
        cv.cubes.emplace_back( n, mask, static_cast<coordinate>( rng() ) & mask );
        /* add both halves of some cubes so decomposition triggers */
        auto const free = cv.cubes.back().free_mask();
        if ( free && rng() % 2u )
        {
          auto const bit = free & ( ~free + 1u );
          cv.cubes.emplace_back( n, mask | bit, cv.cubes.back().fixed_values );
          cv.cubes.emplace_back( n, mask | bit, cv.cubes.back().fixed_values | bit );
        }
      }
      all.cubes.insert( all.cubes.end(), cv.cubes.begin(), cv.cubes.end() );
    }
    auto const merged = consolidate_multi( covers, n );
    CHECK( merged.size() <= all.size() );
    for ( coordinate x = 0u; x < ( 1u << n ); ++x )
    {
      CHECK( evaluate( merged, x ) == evaluate( all, x ) );
    }
  }
}

TEST_CASE( "CSV report", "[bench]" )
{
  bench_record const r{ .dims = 4u, .density = 0.3125, .seed = 7u, .elapsed_seconds = 0.5, .num_implicants = 2u, .num_literals = 5u, .verified = true, .gen_mode = "file", .verify_mode = "exhaustive" };
  std::ostringstream os;
  std::vector<bench_record> const records = { r };
  write_csv( os, records );
  CHECK( os.str() == "dims,density,seed,elapsed_seconds,num_implicants,num_literals,verified,gen_mode,verify_mode\n"
                     "4,0.3125,7,0.5,2,5,true,file,exhaustive\n" );
}

TEST_CASE( "measure a single function", "[bench]" )
{
  auto const r = measure( test::example_function(), 0u, "file" );
  CHECK( r.num_implicants == 2u );
  CHECK( r.num_literals == 5u );
  CHECK( r.verified );
  CHECK( r.density == 5.0 / 16.0 );
}
