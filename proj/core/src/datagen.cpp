#include <cffmin/datagen.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace cffmin
{

namespace
{

/* Draws distinct coordinates until `wanted` were seen, in draw order. */
std::vector<coordinate> draw_distinct( std::mt19937_64& rng, uint32_t n, uint64_t wanted )
{
  std::vector<coordinate> drawn;
  drawn.reserve( wanted );
  auto const shift = 64u - n;

  if ( n <= 24u )
  {
    std::vector<char> seen( std::size_t{ 1 } << n, 0 );
    while ( drawn.size() < wanted )
    {
      auto const c = static_cast<coordinate>( rng() >> shift );
      if ( !seen[c] )
      {
        seen[c] = 1;
        drawn.push_back( c );
      }
    }
  }
  else
  {
    std::unordered_set<coordinate> seen;
    seen.reserve( wanted );
    while ( drawn.size() < wanted )
    {
      auto const c = static_cast<coordinate>( rng() >> shift );
      if ( seen.insert( c ).second )
      {
        drawn.push_back( c );
      }
    }
  }
  return drawn;
}

} // namespace

uint64_t exact_on_count( uint32_t n, double density )
{
  return static_cast<uint64_t>( std::llround( density * std::ldexp( 1.0, static_cast<int>( n ) ) ) );
}

truth_function generate( gen_spec const& spec )
{
  check_dimension( spec.n );
  if ( !( spec.density >= 0.0 && spec.density <= 1.0 ) )
  {
    throw std::invalid_argument( "density must lie in [0, 1]" );
  }

  std::mt19937_64 rng( spec.seed );
  auto const points = uint64_t{ 1 } << spec.n;
  std::vector<coordinate> on;

  if ( spec.mode == gen_mode::bernoulli )
  {
    for ( uint64_t c = 0; c < points; ++c )
    {
      auto const u = static_cast<double>( rng() >> 11u ) * 0x1.0p-53;
      if ( u < spec.density )
      {
        on.push_back( static_cast<coordinate>( c ) );
      }
    }
    return truth_function( spec.n, std::move( on ) );
  }

  auto const target = exact_on_count( spec.n, spec.density );
  if ( 2u * target <= points )
  {
    on = draw_distinct( rng, spec.n, target );
  }
  else
  {
    auto off = draw_distinct( rng, spec.n, points - target );
    std::sort( off.begin(), off.end() );
    on.reserve( target );
    std::size_t next = 0;
    for ( uint64_t c = 0; c < points; ++c )
    {
      if ( next < off.size() && off[next] == c )
      {
        ++next;
        continue;
      }
      on.push_back( static_cast<coordinate>( c ) );
    }
  }
  return truth_function( spec.n, std::move( on ) );
}

char const* to_string( gen_mode mode )
{
  return mode == gen_mode::bernoulli ? "bernoulli" : "exact";
}

gen_mode gen_mode_from_string( std::string_view name )
{
  if ( name == "bernoulli" )
  {
    return gen_mode::bernoulli;
  }
  if ( name == "exact" || name == "exact-count" )
  {
    return gen_mode::exact;
  }
  throw std::invalid_argument( "unknown generation mode '" + std::string( name ) + "'" );
}

} // namespace cffmin
