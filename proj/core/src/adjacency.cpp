#include <cffmin/adjacency.hpp>

#include <algorithm>
#include <stdexcept>

namespace cffmin
{

adjacency_index::adjacency_index( truth_function const& f )
    : n_( f.num_vars() ), on_set_( f.on_set().begin(), f.on_set().end() )
{
  auto const m = static_cast<uint32_t>( on_set_.size() );
  offsets_.reserve( m + 1u );
  offsets_.push_back( 0u );

  for ( auto pos = 0u; pos < m; ++pos )
  {
    auto const c = on_set_[pos];
    for ( auto var = 0u; var < n_; ++var )
    {
      auto const other = c ^ variable_bit( n_, var );
      auto const it = std::lower_bound( on_set_.begin(), on_set_.end(), other );
      if ( it != on_set_.end() && *it == other )
      {
        neighbors_.push_back( { static_cast<uint32_t>( it - on_set_.begin() ), var } );
      }
    }
    offsets_.push_back( static_cast<uint32_t>( neighbors_.size() ) );
  }

  main_order_.resize( m );
  for ( auto pos = 0u; pos < m; ++pos )
  {
    main_order_[pos] = pos;
  }
  /* positions are already in ascending coordinate order, so a stable sort
     on the count alone yields the coordinate tie-break */
  std::stable_sort( main_order_.begin(), main_order_.end(), [this]( auto a, auto b ) {
    return nb_at( a ) < nb_at( b );
  } );
}

uint32_t adjacency_index::position_of( coordinate c ) const
{
  auto const it = std::lower_bound( on_set_.begin(), on_set_.end(), c );
  if ( it == on_set_.end() || *it != c )
  {
    throw std::out_of_range( "coordinate " + coordinate_to_string( c, n_ ) + " not in ON-set" );
  }
  return static_cast<uint32_t>( it - on_set_.begin() );
}

bool adjacency_index::contains( coordinate c ) const
{
  return std::binary_search( on_set_.begin(), on_set_.end(), c );
}

std::vector<coordinate> adjacency_index::ne( coordinate c ) const
{
  std::vector<coordinate> result;
  for ( auto const& nb : neighbors_at( position_of( c ) ) )
  {
    result.push_back( on_set_[nb.position] );
  }
  return result;
}

uint32_t adjacency_index::nb_of( coordinate c ) const
{
  return nb_at( position_of( c ) );
}

} // namespace cffmin
