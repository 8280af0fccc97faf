#include <cffmin/floodfill.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cffmin
{

namespace detail
{

/* Reusable flood fill over positions of an adjacency index.  Elements are
   stamped with the current epoch once they enter SURE or CHECK, so no
   per-fill clearing is needed. */
class flood_engine
{
public:
  explicit flood_engine( adjacency_index const& idx )
      : idx_( idx ), stamp_( idx.size(), 0u )
  {
  }

  flood_status run( cube const& candidate, std::span<uint32_t const> seeds, uint32_t k )
  {
    next_epoch();
    sure_.clear();
    check_.clear();

    for ( auto pos : seeds )
    {
      if ( stamp_[pos] == epoch_ )
      {
        continue;
      }
      stamp_[pos] = epoch_;
      if ( idx_.nb_at( pos ) < k )
      {
        return flood_status::aborted;
      }
      sure_.push_back( pos );
    }
    for ( auto i = 0u; i < sure_.size(); ++i )
    {
      enqueue_neighbors( sure_[i] );
    }

    for ( auto head = 0u; head < check_.size(); ++head )
    {
      auto const pos = check_[head];
      if ( !candidate.contains( idx_.at( pos ) ) )
      {
        continue;
      }
      if ( idx_.nb_at( pos ) < k )
      {
        return flood_status::aborted;
      }
      sure_.push_back( pos );
      enqueue_neighbors( pos );
    }
    return flood_status::complete;
  }

  std::span<uint32_t const> sure() const { return sure_; }

private:
  void next_epoch()
  {
    if ( ++epoch_ == 0u )
    {
      std::fill( stamp_.begin(), stamp_.end(), 0u );
      epoch_ = 1u;
    }
  }

  void enqueue_neighbors( uint32_t pos )
  {
    for ( auto const& nb : idx_.neighbors_at( pos ) )
    {
      if ( stamp_[nb.position] != epoch_ )
      {
        stamp_[nb.position] = epoch_;
        check_.push_back( nb.position );
      }
    }
  }

  adjacency_index const& idx_;
  std::vector<uint32_t> stamp_;
  uint32_t epoch_{ 0 };
  std::vector<uint32_t> sure_;
  std::vector<uint32_t> check_;
};

} // namespace detail

cube candidate_cube( coordinate main, std::span<uint32_t const> free_variables, uint32_t n )
{
  coordinate mask = universe_mask( n );
  for ( auto var : free_variables )
  {
    if ( var >= n )
    {
      throw std::invalid_argument( "free variable index out of range" );
    }
    mask &= ~variable_bit( n, var );
  }
  return cube( n, mask, main & mask );
}

flood_result flood_fill( cube const& candidate, std::span<coordinate const> seeds, adjacency_index const& idx, uint32_t k )
{
  std::vector<uint32_t> seed_positions;
  seed_positions.reserve( seeds.size() );
  for ( auto c : seeds )
  {
    if ( !candidate.contains( c ) )
    {
      throw std::invalid_argument( "seed " + coordinate_to_string( c, idx.num_vars() ) + " is not a member of the candidate cube" );
    }
    seed_positions.push_back( idx.position_of( c ) );
  }

  detail::flood_engine engine( idx );
  flood_result result;
  result.status = engine.run( candidate, seed_positions, k );
  if ( result.status == flood_status::complete )
  {
    for ( auto pos : engine.sure() )
    {
      result.sure.push_back( idx.at( pos ) );
    }
    std::sort( result.sure.begin(), result.sure.end() );
  }
  return result;
}

cover minimize( truth_function const& f, minimize_options const& opts, minimize_stats* stats )
{
  if ( opts.subset_budget == 0u )
  {
    throw std::invalid_argument( "subset budget must be at least 1" );
  }

  adjacency_index const idx( f );
  auto const n = f.num_vars();

  cover result;
  result.n = n;

  std::vector<char> covered( idx.size(), 0 );
  detail::flood_engine engine( idx );
  minimize_stats st;
  std::mt19937_64 rng( opts.seed );

  std::vector<adjacency_index::neighbor> order;
  std::vector<uint32_t> choice;
  std::vector<uint32_t> seeds;
  std::vector<uint32_t> free_vars;

  auto const emit = [&]( uint32_t main_pos, cube const& q, uint32_t k, std::span<uint32_t const> members ) {
    result.cubes.push_back( q );
    result.provenance.push_back( { idx.at( main_pos ), k } );
    for ( auto pos : members )
    {
      covered[pos] = 1;
    }
  };

  for ( auto const main_pos : idx.main_order() )
  {
    if ( covered[main_pos] )
    {
      continue;
    }
    auto const main = idx.at( main_pos );

    /* neighbor preference: uncovered first, then by variable index */
    auto const nbs = idx.neighbors_at( main_pos );
    order.assign( nbs.begin(), nbs.end() );
    if ( !opts.deterministic )
    {
      for ( auto i = order.size(); i > 1u; --i )
      {
        std::swap( order[i - 1u], order[rng() % i] );
      }
    }
    std::stable_partition( order.begin(), order.end(), [&]( auto const& nb ) { return !covered[nb.position]; } );

    auto const d = static_cast<uint32_t>( order.size() );
    bool done = false;
    for ( auto k = d; k > 0u && !done; --k )
    {
      choice.resize( k );
      for ( auto i = 0u; i < k; ++i )
      {
        choice[i] = i;
      }

      std::size_t tried = 0u;
      while ( true )
      {
        if ( tried == opts.subset_budget )
        {
          ++st.budget_exhaustions;
          break;
        }
        ++tried;

        seeds.assign( 1u, main_pos );
        free_vars.clear();
        for ( auto i : choice )
        {
          seeds.push_back( order[i].position );
          free_vars.push_back( order[i].variable );
        }
        auto const candidate = candidate_cube( main, free_vars, n );

        ++st.flood_fills;
        auto const status = engine.run( candidate, seeds, k );
        if ( status == flood_status::aborted )
        {
          ++st.aborted_fills;
        }
        else if ( !validate( engine.sure().size(), k ) )
        {
          ++st.failed_validations;
        }
        else
        {
          emit( main_pos, candidate, k, engine.sure() );
          done = true;
          break;
        }

        /* next k-combination of [0, d) in lexicographic order */
        int i = static_cast<int>( k ) - 1;
        while ( i >= 0 && choice[i] == d - k + static_cast<uint32_t>( i ) )
        {
          --i;
        }
        if ( i < 0 )
        {
          break;
        }
        ++choice[i];
        for ( auto j = static_cast<uint32_t>( i ) + 1u; j < k; ++j )
        {
          choice[j] = choice[j - 1u] + 1u;
        }
      }
    }

    if ( !done )
    {
      uint32_t const self[] = { main_pos };
      emit( main_pos, cube::minterm( main, n ), 0u, self );
    }
  }

  if ( stats )
  {
    *stats = st;
  }
  return result;
}

} // namespace cffmin
