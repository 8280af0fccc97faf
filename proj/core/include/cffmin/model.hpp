/*!
  \file model.hpp
  \brief Boolean-space primitives: coordinates, cubes, covers and functions

  A coordinate is an n-bit point of {0,1}^n stored in an unsigned word.
  Variable 0 is the leftmost letter of the textual form and occupies the
  most significant of the n bits, so the coordinate "0111" has the numeric
  value 7 and equals its row index in the truth table.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cffmin
{

using coordinate = std::uint32_t;

/*! \brief Largest supported number of input variables. */
inline constexpr uint32_t max_dimension = 30u;

/*! \brief Integer bit that stores variable `var` in an `n`-variable space. */
constexpr coordinate variable_bit( uint32_t n, uint32_t var )
{
  return coordinate{ 1 } << ( n - 1u - var );
}

constexpr coordinate universe_mask( uint32_t n )
{
  return n == 0u ? 0u : ( ~coordinate{ 0 } >> ( 32u - n ) );
}

/*! \brief Throws `std::invalid_argument` unless 1 <= n <= max_dimension. */
void check_dimension( uint32_t n );

bool adjacent( coordinate a, coordinate b, uint32_t n );

/*! \brief All n coordinates at Hamming distance one, ordered by flipped variable index. */
std::vector<coordinate> neighbors( coordinate c, uint32_t n );

/*! \brief Renders a coordinate as an n-character 0/1 string, variable 0 first. */
std::string coordinate_to_string( coordinate c, uint32_t n );

/*! \brief Parses an n-character 0/1 string; throws `std::invalid_argument` on bad input. */
coordinate coordinate_from_string( std::string_view text );

/*! \brief Default variable names: A, B, C, ... for n <= 26, otherwise x0 .. x(n-1). */
std::vector<std::string> default_variable_names( uint32_t n );

/*! \brief A subcube of {0,1}^n.

  Fixed positions are set in `fixed_mask` and carry their value in
  `fixed_values`; the remaining positions are free.  A coordinate `c` is a
  member iff `( c & fixed_mask ) == fixed_values`.
*/
struct cube
{
  uint32_t n{ 0 };
  coordinate fixed_mask{ 0 };
  coordinate fixed_values{ 0 };

  cube() = default;

  /*! Validating constructor; throws `std::invalid_argument` when a value bit
      lies outside the mask or outside the n-bit universe. */
  cube( uint32_t n, coordinate fixed_mask, coordinate fixed_values );

  /*! \brief The single-member cube at `c`. */
  static cube minterm( coordinate c, uint32_t n );

  /*! \brief The cube containing every coordinate (constant 1). */
  static cube universe( uint32_t n );

  coordinate free_mask() const { return universe_mask( n ) & ~fixed_mask; }
  uint32_t num_free() const;
  uint32_t num_literals() const;

  /*! \brief Number of members, 2^num_free(). */
  uint64_t size() const { return uint64_t{ 1 } << num_free(); }

  bool contains( coordinate c ) const { return ( c & fixed_mask ) == fixed_values; }

  /*! \brief True iff every member of `other` is a member of this cube. */
  bool contains( cube const& other ) const;

  /*! \brief Invokes `fn( coordinate )` for each member in ascending order. */
  template<typename Fn>
  void foreach_member( Fn&& fn ) const
  {
    auto const free = free_mask();
    coordinate sub = 0u;
    do
    {
      fn( fixed_values | sub );
      sub = ( sub - free ) & free;
    } while ( sub != 0u );
  }

  friend bool operator==( cube const&, cube const& ) = default;
};

/*! \brief Members of `q` in ascending numeric order. */
std::vector<coordinate> cube_members( cube const& q );

/*! \brief Product-term text, e.g. "A'BD"; the universal cube renders as "1". */
std::string cube_expression( cube const& q, std::span<std::string const> names );
std::string cube_expression( cube const& q );

/*! \brief Where and at which size the minimizer emitted a cube. */
struct emission
{
  coordinate main_element{ 0 };
  uint32_t k{ 0 };

  friend bool operator==( emission const&, emission const& ) = default;
};

/*! \brief An ordered sum of cubes.

  `provenance` is either empty (covers that were parsed or produced by the
  exact oracle) or holds exactly one entry per cube.
*/
struct cover
{
  uint32_t n{ 0 };
  std::vector<cube> cubes;
  std::vector<emission> provenance;

  bool empty() const { return cubes.empty(); }
  std::size_t size() const { return cubes.size(); }
  bool has_provenance() const { return !provenance.empty() && provenance.size() == cubes.size(); }
};

bool evaluate( cover const& f, coordinate c );

/*! \brief Sum over cubes of the number of fixed positions. */
uint64_t literal_count( cover const& f );

/*! \brief A single-output function given by its sorted, duplicate-free ON-set. */
class truth_function
{
public:
  truth_function() = default;

  /*! Sorts and deduplicates `on_set`; throws `std::invalid_argument` if n is
      outside [1, max_dimension] or a coordinate does not fit in n bits. */
  truth_function( uint32_t n, std::vector<coordinate> on_set );

  static truth_function constant( uint32_t n, bool value );

  uint32_t num_vars() const { return n_; }
  std::span<coordinate const> on_set() const { return on_set_; }
  std::size_t num_ones() const { return on_set_.size(); }
  uint64_t num_points() const { return uint64_t{ 1 } << n_; }

  bool is_on( coordinate c ) const;

  /*! \brief Position of `c` in `on_set()`, if it is an ON coordinate. */
  std::optional<std::size_t> index_of( coordinate c ) const;

  friend bool operator==( truth_function const&, truth_function const& ) = default;

private:
  uint32_t n_{ 0 };
  std::vector<coordinate> on_set_;
};

} // namespace cffmin
