/*!
  \file oracle.hpp
  \brief Exact reference procedures used to check the heuristic

  `qm_primes` computes all prime implicants by iterated pairwise merging,
  `qm_minimum_cover` solves the prime covering problem exactly, and
  `equivalent` compares a cover against a function point by point.
*/

#pragma once

#include <cffmin/model.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cffmin
{

inline constexpr uint32_t qm_prime_limit = 12u;
inline constexpr uint32_t qm_cover_limit = 10u;
inline constexpr uint32_t exhaustive_check_limit = 20u;

class oracle_limit_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct prime_set
{
  uint32_t n{ 0 };
  std::vector<cube> primes; /* sorted by (fixed_mask, fixed_values) */
};

/*! \brief All prime implicants of `f`; throws `oracle_limit_error` for n > 12. */
prime_set qm_primes( truth_function const& f );

/*! \brief A cover of minimum cube count, ties broken by minimum literal count.

  Two branch-and-bound passes over the prime table: the first minimizes the
  cube count, the second minimizes literals among covers of that size.
  Essential primes and row/column dominance shrink each node, and bounds
  come from Lagrangian relaxation.  Throws `oracle_limit_error` for n > 10.
*/
cover qm_minimum_cover( truth_function const& f );

enum class check_mode
{
  exhaustive,
  sampled
};

struct equivalence_result
{
  bool equivalent{ false };
  check_mode mode{ check_mode::exhaustive };
  std::optional<coordinate> counterexample; /* smallest mismatch in exhaustive mode */
  uint64_t points_checked{ 0 };
};

struct equivalence_options
{
  uint64_t seed{ 0 };
  uint64_t off_samples{ 1'000'000 };
};

/*! \brief Compares `cover` with `f` on every point for n <= 20.

  Above that bound every ON coordinate is checked together with
  `off_samples` OFF coordinates drawn from a generator seeded with `seed`.
*/
equivalence_result equivalent( truth_function const& f, cover const& cover, equivalence_options const& opts = {} );

char const* to_string( check_mode mode );

/*! \brief Number of cubes all of whose members are also covered by other cubes of `cover`. */
std::size_t count_redundant_cubes( cover const& cover );

} // namespace cffmin
