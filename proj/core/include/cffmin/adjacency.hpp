/*!
  \file adjacency.hpp
  \brief Neighbor extraction, neighbor counts and the sorted work list

  For every ON coordinate the index stores its ON neighbors (the coordinates
  reached by flipping a single variable that are themselves ON), their
  count, and the order in which the minimizer visits main elements:
  ascending neighbor count, ties broken by ascending coordinate.

  Entries are addressed either by coordinate or by position, where a
  position is the rank of the coordinate in the function's sorted ON-set.
*/

#pragma once

#include <cffmin/model.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace cffmin
{

class adjacency_index
{
public:
  /*! \brief One ON neighbor: its position and the variable flipped to reach it. */
  struct neighbor
  {
    uint32_t position;
    uint32_t variable;

    friend bool operator==( neighbor const&, neighbor const& ) = default;
  };

  explicit adjacency_index( truth_function const& f );

  uint32_t num_vars() const { return n_; }
  std::size_t size() const { return on_set_.size(); }
  bool empty() const { return on_set_.empty(); }

  std::span<coordinate const> on_set() const { return on_set_; }
  coordinate at( uint32_t position ) const { return on_set_[position]; }

  /*! \brief Position of an ON coordinate; throws `std::out_of_range` ("not in ON-set") otherwise. */
  uint32_t position_of( coordinate c ) const;
  bool contains( coordinate c ) const;

  /*! \brief ON neighbors of the entry at `position`, ordered by flipped variable. */
  std::span<neighbor const> neighbors_at( uint32_t position ) const
  {
    return { neighbors_.data() + offsets_[position], neighbors_.data() + offsets_[position + 1] };
  }
  uint32_t nb_at( uint32_t position ) const { return offsets_[position + 1] - offsets_[position]; }

  /*! \brief ON neighbors of `c` as coordinates. */
  std::vector<coordinate> ne( coordinate c ) const;
  uint32_t nb_of( coordinate c ) const;

  /*! \brief Positions sorted by ascending neighbor count, then ascending coordinate. */
  std::span<uint32_t const> main_order() const { return main_order_; }

  bool operator==( adjacency_index const& ) const = default;

private:
  uint32_t n_{ 0 };
  std::vector<coordinate> on_set_;
  std::vector<uint32_t> offsets_;
  std::vector<neighbor> neighbors_;
  std::vector<uint32_t> main_order_;
};

/*! \brief Builds the adjacency index of `f`. */
inline adjacency_index build_index( truth_function const& f )
{
  return adjacency_index( f );
}

} // namespace cffmin
