/*!
  \file floodfill.hpp
  \brief Conditional flood fill two-level minimization

  The minimizer walks the ON-set in ascending neighbor-count order.  For
  each main element that is not yet covered it starts from k = number of ON
  neighbors and picks k of those neighbors; together with the main element
  they determine a candidate cube whose free positions are the flipped
  variables.  A flood fill over ON coordinates then collects every member of
  the candidate reachable from the seeds.  An aligned element with fewer
  than k ON neighbors cannot lie in a 2^k cube, so it aborts the fill.  A
  fill that collects exactly 2^k members is a valid implicant; it is
  emitted and its members are marked covered.  Covered members stay usable
  as don't-cares for later cubes.  After all k-subsets allowed by the
  budget fail, k is decremented; k = 0 always succeeds.
*/

#pragma once

#include <cffmin/adjacency.hpp>
#include <cffmin/model.hpp>

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace cffmin
{

struct minimize_options
{
  /*! \brief Maximum k-subsets tried per (main element, k) before k is decremented. */
  std::size_t subset_budget{ std::numeric_limits<std::size_t>::max() };

  /*! \brief Canonical subset order; when false the neighbor order is shuffled with `seed`. */
  bool deterministic{ true };

  uint64_t seed{ 0 };
};

struct minimize_stats
{
  uint64_t flood_fills{ 0 };
  uint64_t aborted_fills{ 0 };
  uint64_t failed_validations{ 0 };
  uint64_t budget_exhaustions{ 0 };
};

enum class flood_status
{
  complete,
  aborted
};

struct flood_result
{
  flood_status status{ flood_status::aborted };
  std::vector<coordinate> sure; /* ascending; empty when aborted */
};

/*! \brief Cube through `main` whose free positions are `free_variables`. */
cube candidate_cube( coordinate main, std::span<uint32_t const> free_variables, uint32_t n );

/*! \brief Grows `seeds` inside `candidate` over ON coordinates.

  Seeds must be ON members of the candidate.  Every processed element that
  matches the candidate must have at least `k` ON neighbors, otherwise the
  fill is aborted.
*/
flood_result flood_fill( cube const& candidate, std::span<coordinate const> seeds, adjacency_index const& idx, uint32_t k );

/*! \brief True iff a completed fill collected exactly 2^k elements. */
inline bool validate( std::size_t sure_size, uint32_t k )
{
  return k < 64u && sure_size == ( std::size_t{ 1 } << k );
}

cover minimize( truth_function const& f, minimize_options const& opts = {}, minimize_stats* stats = nullptr );

} // namespace cffmin
