/*!
  \file datagen.hpp
  \brief Seeded random functions of a given dimension and density

  Instances are drawn from `std::mt19937_64`, whose output sequence is fixed
  by the C++ standard (the 10000th output for the default seed 5489 is
  9981545732273789042), so identical specs give identical functions on
  every conforming platform.  No standard distribution objects are used;
  the mapping from generator words to coordinates is spelled out below.

  - bernoulli: for c = 0, 1, ..., 2^n - 1 in order, draw one word w and set
    c ON iff (w >> 11) * 2^-53 < density.
  - exact: let t = round(density * 2^n).  If 2t <= 2^n, draw coordinates
    w >> (64 - n) until t distinct ones were seen; they form the ON-set.
    Otherwise draw 2^n - t distinct coordinates the same way and take the
    complement.
*/

#pragma once

#include <cffmin/model.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace cffmin
{

enum class gen_mode
{
  bernoulli,
  exact
};

struct gen_spec
{
  uint32_t n{ 0 };
  double density{ 0.0 };
  uint64_t seed{ 0 };
  gen_mode mode{ gen_mode::exact };
};

/*! \brief round(density * 2^n), the ON count of an exact-mode instance. */
uint64_t exact_on_count( uint32_t n, double density );

/*! \brief Throws `std::invalid_argument` for density outside [0, 1] or an unsupported n. */
truth_function generate( gen_spec const& spec );

char const* to_string( gen_mode mode );
gen_mode gen_mode_from_string( std::string_view name );

} // namespace cffmin
