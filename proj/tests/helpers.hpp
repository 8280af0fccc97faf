#pragma once

#include <cffmin/model.hpp>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace cffmin::test
{

/* f(A,B,C,D) = A'C' + A'BD */
inline truth_function example_function()
{
  return truth_function( 4u, { 0b0000, 0b0001, 0b0100, 0b0101, 0b0111 } );
}

inline truth_function random_function( uint32_t n, double density, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::bernoulli_distribution bit( density );
  std::vector<coordinate> on;
  for ( coordinate c = 0u; c < ( coordinate{ 1 } << n ); ++c )
  {
    if ( bit( rng ) )
    {
      on.push_back( c );
    }
  }
  return truth_function( n, std::move( on ) );
}

/* Every cube of {0,1}^n, i.e. all 3^n assignments of 0/1/free per variable. */
inline std::vector<cube> all_cubes( uint32_t n )
{
  std::vector<cube> cubes;
  uint64_t total = 1u;
  for ( auto i = 0u; i < n; ++i )
  {
    total *= 3u;
  }
  for ( uint64_t code = 0u; code < total; ++code )
  {
    coordinate mask = 0u;
    coordinate values = 0u;
    auto rest = code;
    for ( auto var = 0u; var < n; ++var )
    {
      auto const digit = rest % 3u;
      rest /= 3u;
      auto const bit = variable_bit( n, var );
      if ( digit != 2u )
      {
        mask |= bit;
        values |= digit == 1u ? bit : 0u;
      }
    }
    cubes.emplace_back( n, mask, values );
  }
  return cubes;
}

/* Implicant test by direct enumeration of the members. */
inline bool is_implicant( truth_function const& f, cube const& q )
{
  for ( uint64_t c = 0u; c < f.num_points(); ++c )
  {
    if ( q.contains( static_cast<coordinate>( c ) ) && !f.is_on( static_cast<coordinate>( c ) ) )
    {
      return false;
    }
  }
  return true;
}

/* Primes by brute force: implicants with no implicant that strictly contains them. */
inline std::vector<cube> brute_force_primes( truth_function const& f )
{
  std::vector<cube> implicants;
  for ( auto const& q : all_cubes( f.num_vars() ) )
  {
    if ( is_implicant( f, q ) )
    {
      implicants.push_back( q );
    }
  }
  std::vector<cube> primes;
  for ( auto const& q : implicants )
  {
    bool maximal = true;
    for ( auto const& p : implicants )
    {
      if ( !( p == q ) && p.contains( q ) )
      {
        maximal = false;
        break;
      }
    }
    if ( maximal )
    {
      primes.push_back( q );
    }
  }
  return primes;
}

/* Brute-force evaluation of a cover against a function. */
inline bool brute_force_equal( truth_function const& f, cover const& cv )
{
  for ( uint64_t c = 0u; c < f.num_points(); ++c )
  {
    auto const x = static_cast<coordinate>( c );
    bool covered = false;
    for ( auto const& q : cv.cubes )
    {
      covered = covered || ( ( x & q.fixed_mask ) == q.fixed_values );
    }
    if ( covered != f.is_on( x ) )
    {
      return false;
    }
  }
  return true;
}

/* Number of ON neighbors by flipping each bit and testing membership. */
inline uint32_t brute_force_nb( truth_function const& f, coordinate c )
{
  uint32_t count = 0u;
  for ( auto i = 0u; i < f.num_vars(); ++i )
  {
    count += f.is_on( c ^ ( coordinate{ 1 } << i ) ) ? 1u : 0u;
  }
  return count;
}

} // namespace cffmin::test
