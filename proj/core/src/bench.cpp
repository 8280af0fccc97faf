#include <cffmin/bench.hpp>
#include <cffmin/oracle.hpp>

#include <charconv>
#include <chrono>
#include <set>
#include <stdexcept>
#include <utility>

namespace cffmin
{

namespace
{

uint64_t splitmix64( uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30u ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27u ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31u );
}

std::string format_double( double value )
{
  char buf[64];
  auto const [ptr, ec] = std::to_chars( buf, buf + sizeof( buf ), value );
  return ec == std::errc{} ? std::string( buf, ptr ) : std::to_string( value );
}

} // namespace

uint64_t instance_seed( uint64_t base, uint32_t dims, std::size_t density_index, std::size_t repeat )
{
  auto x = splitmix64( base );
  x = splitmix64( x ^ dims );
  x = splitmix64( x ^ density_index );
  return splitmix64( x ^ repeat );
}

bench_record measure( truth_function const& f, uint64_t seed, std::string gen_mode, sweep_options const& opts, cover* minimized )
{
  bench_record r;
  r.dims = f.num_vars();
  r.density = static_cast<double>( f.num_ones() ) / static_cast<double>( f.num_points() );
  r.seed = seed;
  r.gen_mode = std::move( gen_mode );

  auto const start = std::chrono::steady_clock::now();
  auto const cv = minimize( f, opts.minimize );
  auto const stop = std::chrono::steady_clock::now();

  r.elapsed_seconds = std::chrono::duration<double>( stop - start ).count();
  r.num_implicants = cv.size();
  r.num_literals = literal_count( cv );

  if ( opts.verify )
  {
    auto const check = equivalent( f, cv, { .seed = seed } );
    r.verified = check.equivalent;
    r.verify_mode = to_string( check.mode );
  }
  else
  {
    r.verify_mode = "skipped";
  }
  if ( minimized )
  {
    *minimized = cv;
  }
  return r;
}

std::vector<bench_record> sweep( std::span<uint32_t const> dims, std::span<double const> densities, std::size_t repeats, uint64_t seed, sweep_options const& opts )
{
  std::vector<bench_record> records;
  records.reserve( dims.size() * densities.size() * repeats );
  for ( auto d : dims )
  {
    for ( auto j = 0u; j < densities.size(); ++j )
    {
      for ( std::size_t rep = 0; rep < repeats; ++rep )
      {
        auto const s = instance_seed( seed, d, j, rep );
        auto const f = generate( { .n = d, .density = densities[j], .seed = s, .mode = opts.mode } );
        auto r = measure( f, s, to_string( opts.mode ), opts );
        r.density = densities[j];
        records.push_back( std::move( r ) );
      }
    }
  }
  return records;
}

double reduction_percent( uint64_t original_literals, uint64_t minimized_literals )
{
  if ( original_literals == 0u )
  {
    throw std::invalid_argument( "original literal count must be positive" );
  }
  return 100.0 * ( static_cast<double>( original_literals ) - static_cast<double>( minimized_literals ) ) / static_cast<double>( original_literals );
}

cover consolidate_multi( std::span<cover const> covers, uint32_t n )
{
  cover merged;
  merged.n = n;

  auto const key = []( cube const& q ) { return std::pair{ q.fixed_mask, q.fixed_values }; };
  std::set<std::pair<coordinate, coordinate>> present;
  std::vector<cube> unique;
  for ( auto const& cv : covers )
  {
    if ( cv.n != n )
    {
      throw std::invalid_argument( "all covers must share the same dimension" );
    }
    for ( auto const& q : cv.cubes )
    {
      if ( present.insert( key( q ) ).second )
      {
        unique.push_back( q );
      }
    }
  }

  for ( auto const& q : unique )
  {
    bool decomposable = false;
    auto free = q.free_mask();
    while ( free && !decomposable )
    {
      auto const bit = free & ( ~free + 1u );
      free &= free - 1u;
      auto const mask = q.fixed_mask | bit;
      decomposable = present.count( { mask, q.fixed_values } ) && present.count( { mask, q.fixed_values | bit } );
    }
    if ( !decomposable )
    {
      merged.cubes.push_back( q );
    }
  }
  return merged;
}

void write_csv_header( std::ostream& os )
{
  os << csv_header << '\n';
}

void write_csv_row( std::ostream& os, bench_record const& r )
{
  os << r.dims << ',' << format_double( r.density ) << ',' << r.seed << ',' << format_double( r.elapsed_seconds ) << ','
     << r.num_implicants << ',' << r.num_literals << ',' << ( r.verified ? "true" : "false" ) << ',' << r.gen_mode << ','
     << r.verify_mode << '\n';
}

void write_csv( std::ostream& os, std::span<bench_record const> records )
{
  write_csv_header( os );
  for ( auto const& r : records )
  {
    write_csv_row( os, r );
  }
}

} // namespace cffmin
