/*!
  \file bench.hpp
  \brief Dimension x density timing sweeps and multi-output postprocessing
*/

#pragma once

#include <cffmin/datagen.hpp>
#include <cffmin/floodfill.hpp>
#include <cffmin/model.hpp>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cffmin
{

struct bench_record
{
  uint32_t dims{ 0 };
  double density{ 0.0 };
  uint64_t seed{ 0 };
  double elapsed_seconds{ 0.0 }; /* minimize only */
  uint64_t num_implicants{ 0 };
  uint64_t num_literals{ 0 };
  bool verified{ false };
  std::string gen_mode;    /* "bernoulli", "exact" or "file" */
  std::string verify_mode; /* "exhaustive", "sampled" or "skipped" */
};

struct sweep_options
{
  gen_mode mode{ gen_mode::exact };
  bool verify{ true };
  minimize_options minimize;
};

/*! \brief Seed of the instance for one sweep cell and repeat (splitmix64 mixing). */
uint64_t instance_seed( uint64_t base, uint32_t dims, std::size_t density_index, std::size_t repeat );

/*! \brief Times `minimize` on `repeats` fresh instances per (dims, density) cell.

  Records are ordered by dims, then density, then repeat.  Instance
  generation and verification are excluded from the measured time.
*/
std::vector<bench_record> sweep( std::span<uint32_t const> dims, std::span<double const> densities, std::size_t repeats, uint64_t seed, sweep_options const& opts = {} );

/*! \brief Times and verifies one given function; the cover is stored in `minimized` when given. */
bench_record measure( truth_function const& f, uint64_t seed, std::string gen_mode, sweep_options const& opts = {}, cover* minimized = nullptr );

/*! \brief 100 * (original - minimized) / original; throws `std::invalid_argument` when original is 0. */
double reduction_percent( uint64_t original_literals, uint64_t minimized_literals );

/*! \brief Merges per-output covers into one cube list.

  Exact duplicates are dropped (first occurrence wins).  Then, in a single
  pass over the deduplicated union, a cube is removed when for some free
  position both of its halves appear verbatim in the union.
*/
cover consolidate_multi( std::span<cover const> covers, uint32_t n );

inline constexpr char const* csv_header = "dims,density,seed,elapsed_seconds,num_implicants,num_literals,verified,gen_mode,verify_mode";

void write_csv_header( std::ostream& os );
void write_csv_row( std::ostream& os, bench_record const& r );
void write_csv( std::ostream& os, std::span<bench_record const> records );

} // namespace cffmin
