#include <catch2/catch_amalgamated.hpp>

#include <cffmin/adjacency.hpp>

#include "helpers.hpp"

using namespace cffmin;

TEST_CASE( "neighbor counts of the four-variable example", "[adjacency]" )
{
  auto const f = test::example_function();
  auto const idx = build_index( f );

  /* frozen from the bit-flip enumeration in brute_force_nb */
  REQUIRE( test::brute_force_nb( f, 0b0111 ) == 1u );
  REQUIRE( test::brute_force_nb( f, 0b0101 ) == 3u );
  REQUIRE( test::brute_force_nb( f, 0b0000 ) == 2u );

  CHECK( idx.nb_of( 0b0111 ) == 1u );
  CHECK( idx.ne( 0b0111 ) == std::vector<coordinate>{ 0b0101 } );
  CHECK( idx.nb_of( 0b0101 ) == 3u );
  CHECK( idx.ne( 0b0101 ) == std::vector<coordinate>{ 0b0001, 0b0111, 0b0100 } );
  CHECK( idx.nb_of( 0b0000 ) == 2u );

  /* ascending count, ties by coordinate: 0111(1), 0000, 0001, 0100 (2), 0101(3) */
  std::vector<coordinate> order;
  for ( auto pos : idx.main_order() )
  {
    order.push_back( idx.at( pos ) );
  }
  CHECK( order == std::vector<coordinate>{ 0b0111, 0b0000, 0b0001, 0b0100, 0b0101 } );
}

TEST_CASE( "degenerate functions", "[adjacency]" )
{
  auto const zero = build_index( truth_function::constant( 4u, false ) );
  CHECK( zero.empty() );
  CHECK( zero.main_order().empty() );
  CHECK_THROWS_AS( zero.nb_of( 0u ), std::out_of_range );

  auto const single = build_index( truth_function( 4u, { 9u } ) );
  CHECK( single.nb_of( 9u ) == 0u );

  auto const one = build_index( truth_function::constant( 3u, true ) );
  for ( coordinate c = 0u; c < 8u; ++c )
  {
    CHECK( one.nb_of( c ) == 3u );
  }
}

TEST_CASE( "unknown coordinates are rejected", "[adjacency]" )
{
  auto const idx = build_index( test::example_function() );
  CHECK_THROWS_WITH( idx.nb_of( 0b1000 ), Catch::Matchers::ContainsSubstring( "not in ON-set" ) );
}

TEST_CASE( "index invariants on random functions", "[adjacency][property]" )
{
  for ( auto seed = 0u; seed < 60u; ++seed )
  {
    auto const n = 2u + seed % 9u;
    auto const f = test::random_function( n, 0.1 + 0.15 * ( seed % 6u ), seed );
    auto const idx = build_index( f );

    for ( auto c : f.on_set() )
    {
      auto const nb = idx.nb_of( c );
      CHECK( nb == test::brute_force_nb( f, c ) );
      CHECK( nb <= n );
      for ( auto other : idx.ne( c ) )
      {
        CHECK( f.is_on( other ) );
        CHECK( adjacent( c, other, n ) );
        auto const back = idx.ne( other );
        CHECK( std::find( back.begin(), back.end(), c ) != back.end() );
      }
    }

    auto const order = idx.main_order();
    REQUIRE( order.size() == f.num_ones() );
    std::vector<uint32_t> sorted( order.begin(), order.end() );
    std::sort( sorted.begin(), sorted.end() );
    for ( auto i = 0u; i < sorted.size(); ++i )
    {
      CHECK( sorted[i] == i );
    }
    for ( auto i = 1u; i < order.size(); ++i )
    {
      CHECK( idx.nb_at( order[i - 1] ) <= idx.nb_at( order[i] ) );
    }

    CHECK( build_index( f ) == idx );
  }
}
