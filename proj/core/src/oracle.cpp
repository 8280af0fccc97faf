#include <cffmin/oracle.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <unordered_set>

namespace cffmin
{

namespace detail
{

using bitset = std::vector<uint64_t>;

inline bool test_bit( bitset const& b, uint32_t i ) { return ( b[i >> 6u] >> ( i & 63u ) ) & 1u; }
inline void set_bit( bitset& b, uint32_t i ) { b[i >> 6u] |= uint64_t{ 1 } << ( i & 63u ); }
inline void clear_bit( bitset& b, uint32_t i ) { b[i >> 6u] &= ~( uint64_t{ 1 } << ( i & 63u ) ); }

inline bool none( bitset const& b )
{
  return std::all_of( b.begin(), b.end(), []( auto w ) { return w == 0u; } );
}

inline uint32_t count( bitset const& b )
{
  uint32_t total = 0u;
  for ( auto w : b )
  {
    total += static_cast<uint32_t>( std::popcount( w ) );
  }
  return total;
}

inline bool is_subset( bitset const& a, bitset const& b )
{
  for ( auto i = 0u; i < a.size(); ++i )
  {
    if ( a[i] & ~b[i] )
    {
      return false;
    }
  }
  return true;
}

inline bool intersects( bitset const& a, bitset const& b )
{
  for ( auto i = 0u; i < a.size(); ++i )
  {
    if ( a[i] & b[i] )
    {
      return true;
    }
  }
  return false;
}

template<typename Fn>
inline void foreach_bit( bitset const& b, Fn&& fn )
{
  for ( auto w = 0u; w < b.size(); ++w )
  {
    auto word = b[w];
    while ( word )
    {
      fn( w * 64u + static_cast<uint32_t>( std::countr_zero( word ) ) );
      word &= word - 1u;
    }
  }
}

/* Minimum-cost unate covering: choose columns so that every row is covered
   by at least one chosen column, optionally with at most `max_columns`
   columns.  Branch and bound over reduced matrices; bounds come from
   Lagrangian relaxations of the row constraints solved by subgradient
   steps, one for the cost and one for the column count when capped.  The
   same multipliers drive reduced-cost column fixing and the primal
   heuristic.  Costs must be integral. */
class covering_solver
{
public:
  covering_solver( std::vector<bitset> col_rows, std::vector<uint64_t> costs, uint32_t num_rows,
                   std::size_t max_columns = std::numeric_limits<std::size_t>::max() )
      : col_rows_( std::move( col_rows ) ), costs_( std::move( costs ) ), num_rows_( num_rows ),
        row_words_( ( num_rows + 63u ) / 64u ), max_columns_( max_columns )
  {
  }

  /* known feasible solution; it is returned unless something cheaper is found */
  void set_incumbent( std::vector<uint32_t> cols )
  {
    uint64_t cost = 0u;
    for ( auto c : cols )
    {
      cost += costs_[c];
    }
    best_ = std::move( cols );
    best_cost_ = cost;
  }

  std::vector<uint32_t> solve()
  {
    node root;
    root.rows_left.assign( row_words_, 0u );
    for ( auto r = 0u; r < num_rows_; ++r )
    {
      set_bit( root.rows_left, r );
    }
    for ( auto c = 0u; c < col_rows_.size(); ++c )
    {
      root.cols.push_back( c );
    }

    std::vector<double> multipliers( num_rows_, 0.0 );
    search( std::move( root ), multipliers, multipliers, true );
    std::sort( best_.begin(), best_.end() );
    return best_;
  }

private:
  struct node
  {
    bitset rows_left;
    std::vector<uint32_t> cols;
    std::vector<uint32_t> chosen;
    uint64_t cost{ 0 };
  };

  /* active part of the matrix as adjacency lists over local indices */
  struct view
  {
    std::vector<uint32_t> rows;                 /* global row ids */
    std::vector<std::vector<uint32_t>> col_rows; /* per active column: local row indices */
    std::vector<std::vector<uint32_t>> row_cols; /* per active row: local column indices */
  };

  void choose( node& nd, uint32_t c ) const
  {
    nd.chosen.push_back( c );
    nd.cost += costs_[c];
    for ( auto w = 0u; w < row_words_; ++w )
    {
      nd.rows_left[w] &= ~col_rows_[c][w];
    }
  }

  bool capped() const { return max_columns_ != std::numeric_limits<std::size_t>::max(); }

  /* costs are integral: only solutions of cost <= best - 1 are of interest */
  double cost_limit() const { return static_cast<double>( best_cost_ ) - 1.0 + 1e-6; }

  bool prunable( double bound ) const { return bound > cost_limit(); }

  void record( std::vector<uint32_t> const& chosen, uint64_t cost )
  {
    if ( cost < best_cost_ && chosen.size() <= max_columns_ )
    {
      best_cost_ = cost;
      best_ = chosen;
    }
  }

  /* Applies essential columns and row/column dominance until a fixed point.
     Returns false when some row can no longer be covered. */
  bool reduce( node& nd ) const
  {
    while ( true )
    {
      std::vector<uint32_t> rows;
      foreach_bit( nd.rows_left, [&]( uint32_t r ) { rows.push_back( r ); } );
      if ( rows.empty() )
      {
        nd.cols.clear();
        return true;
      }

      std::erase_if( nd.cols, [&]( uint32_t c ) { return !intersects( col_rows_[c], nd.rows_left ); } );

      auto const ncols = static_cast<uint32_t>( nd.cols.size() );
      auto const col_words = ( ncols + 63u ) / 64u;
      std::vector<uint32_t> slot( num_rows_, 0u );
      for ( auto i = 0u; i < rows.size(); ++i )
      {
        slot[rows[i]] = i;
      }
      std::vector<bitset> row_cols( rows.size(), bitset( col_words, 0u ) );
      for ( auto j = 0u; j < ncols; ++j )
      {
        auto const c = nd.cols[j];
        for ( auto w = 0u; w < row_words_; ++w )
        {
          auto word = col_rows_[c][w] & nd.rows_left[w];
          while ( word )
          {
            set_bit( row_cols[slot[w * 64u + static_cast<uint32_t>( std::countr_zero( word ) )]], j );
            word &= word - 1u;
          }
        }
      }

      /* essential columns */
      bitset essential( col_words, 0u );
      bool any_essential = false;
      std::vector<uint32_t> row_count( rows.size() );
      for ( auto i = 0u; i < rows.size(); ++i )
      {
        row_count[i] = count( row_cols[i] );
        if ( row_count[i] == 0u )
        {
          return false;
        }
        if ( row_count[i] == 1u )
        {
          foreach_bit( row_cols[i], [&]( uint32_t j ) { set_bit( essential, j ); } );
          any_essential = true;
        }
      }
      if ( any_essential )
      {
        std::vector<uint32_t> kept;
        for ( auto j = 0u; j < ncols; ++j )
        {
          if ( test_bit( essential, j ) )
          {
            choose( nd, nd.cols[j] );
          }
          else
          {
            kept.push_back( nd.cols[j] );
          }
        }
        nd.cols = std::move( kept );
        continue;
      }

      /* row dominance: a row whose columns include another row's columns is implied */
      bool changed = false;
      std::vector<char> row_dropped( rows.size(), 0 );
      for ( auto a = 0u; a < rows.size(); ++a )
      {
        if ( row_dropped[a] )
        {
          continue;
        }
        for ( auto b = 0u; b < rows.size(); ++b )
        {
          if ( a == b || row_dropped[b] || row_count[a] > row_count[b] || ( row_count[a] == row_count[b] && b < a ) )
          {
            continue;
          }
          if ( is_subset( row_cols[a], row_cols[b] ) )
          {
            row_dropped[b] = 1;
            clear_bit( nd.rows_left, rows[b] );
            changed = true;
          }
        }
      }
      if ( changed )
      {
        continue;
      }

      /* column dominance: drop a column whose rows are covered by a no more expensive column */
      std::vector<bitset> col_sets( ncols, bitset( row_words_ ) );
      std::vector<uint32_t> col_count( ncols );
      for ( auto j = 0u; j < ncols; ++j )
      {
        for ( auto w = 0u; w < row_words_; ++w )
        {
          col_sets[j][w] = col_rows_[nd.cols[j]][w] & nd.rows_left[w];
        }
        col_count[j] = count( col_sets[j] );
      }
      std::vector<char> col_dropped( ncols, 0 );
      for ( auto a = 0u; a < ncols; ++a )
      {
        for ( auto b = 0u; b < ncols && !col_dropped[a]; ++b )
        {
          if ( a == b || col_dropped[b] || col_count[a] > col_count[b] )
          {
            continue;
          }
          auto const ca = costs_[nd.cols[a]];
          auto const cb = costs_[nd.cols[b]];
          if ( cb > ca || ( col_count[a] == col_count[b] && cb == ca && a < b ) )
          {
            continue;
          }
          if ( is_subset( col_sets[a], col_sets[b] ) )
          {
            col_dropped[a] = 1;
            changed = true;
          }
        }
      }
      if ( changed )
      {
        std::vector<uint32_t> kept;
        for ( auto j = 0u; j < ncols; ++j )
        {
          if ( !col_dropped[j] )
          {
            kept.push_back( nd.cols[j] );
          }
        }
        nd.cols = std::move( kept );
        continue;
      }
      return true;
    }
  }

  view make_view( node const& nd ) const
  {
    view v;
    foreach_bit( nd.rows_left, [&]( uint32_t r ) { v.rows.push_back( r ); } );
    std::vector<uint32_t> slot( num_rows_, 0u );
    for ( auto i = 0u; i < v.rows.size(); ++i )
    {
      slot[v.rows[i]] = i;
    }
    v.col_rows.resize( nd.cols.size() );
    v.row_cols.resize( v.rows.size() );
    for ( auto j = 0u; j < nd.cols.size(); ++j )
    {
      for ( auto w = 0u; w < row_words_; ++w )
      {
        auto word = col_rows_[nd.cols[j]][w] & nd.rows_left[w];
        while ( word )
        {
          auto const i = slot[w * 64u + static_cast<uint32_t>( std::countr_zero( word ) )];
          v.col_rows[j].push_back( i );
          v.row_cols[i].push_back( j );
          word &= word - 1u;
        }
      }
    }
    return v;
  }

  /* Subgradient optimization of the Lagrangian dual for column costs `cost`.
     Stops early once the bound exceeds `limit`; `target` estimates the
     optimum and scales the steps.  On return `u` holds the best multipliers
     (global row ids), `rc` the reduced costs at `u`, and the best bound is
     returned. */
  double lagrangian( view const& v, std::vector<double> const& cost, std::vector<double>& u, std::vector<double>& rc,
                     uint32_t iterations, double target, double limit ) const
  {
    auto const nrows = v.rows.size();
    auto const ncols = v.col_rows.size();
    std::vector<double> cur( nrows ), best_u( nrows ), g( nrows );
    for ( auto i = 0u; i < nrows; ++i )
    {
      cur[i] = u[v.rows[i]];
      if ( cur[i] <= 0.0 )
      {
        /* initial guess: cheapest column per row, shared among its rows */
        double init = std::numeric_limits<double>::max();
        for ( auto j : v.row_cols[i] )
        {
          init = std::min( init, cost[j] / static_cast<double>( v.col_rows[j].size() ) );
        }
        cur[i] = init;
      }
    }

    double best_bound = -std::numeric_limits<double>::max();
    double step_scale = 2.0;
    uint32_t stall = 0u;
    rc.assign( ncols, 0.0 );

    for ( auto it = 0u; it < iterations; ++it )
    {
      double bound = 0.0;
      for ( auto i = 0u; i < nrows; ++i )
      {
        bound += cur[i];
        g[i] = 1.0;
      }
      for ( auto j = 0u; j < ncols; ++j )
      {
        double r = cost[j];
        for ( auto i : v.col_rows[j] )
        {
          r -= cur[i];
        }
        if ( r < 0.0 )
        {
          bound += r;
          for ( auto i : v.col_rows[j] )
          {
            g[i] -= 1.0;
          }
        }
      }

      if ( bound > best_bound + 1e-9 )
      {
        best_bound = bound;
        best_u = cur;
        stall = 0u;
      }
      else if ( ++stall >= 20u )
      {
        step_scale *= 0.5;
        stall = 0u;
        if ( step_scale < 1e-3 )
        {
          break;
        }
      }
      if ( best_bound > limit )
      {
        break;
      }

      double norm = 0.0;
      for ( auto i = 0u; i < nrows; ++i )
      {
        /* projected subgradient: components that would push u below 0 do not count */
        if ( cur[i] <= 0.0 && g[i] < 0.0 )
        {
          g[i] = 0.0;
        }
        norm += g[i] * g[i];
      }
      if ( norm == 0.0 )
      {
        break;
      }
      auto const step = step_scale * std::max( target - bound, 1.0 ) / norm;
      for ( auto i = 0u; i < nrows; ++i )
      {
        cur[i] = std::max( 0.0, cur[i] + step * g[i] );
      }
    }

    for ( auto i = 0u; i < nrows; ++i )
    {
      u[v.rows[i]] = best_u[i];
    }
    for ( auto j = 0u; j < ncols; ++j )
    {
      double r = cost[j];
      for ( auto i : v.col_rows[j] )
      {
        r -= best_u[i];
      }
      rc[j] = r;
    }
    return best_bound;
  }

  /* Greedy completion guided by reduced costs, followed by removal of
     redundant columns. */
  void primal_heuristic( node const& nd, view const& v, std::vector<double> const& rc )
  {
    auto const nrows = v.rows.size();
    auto const ncols = v.col_rows.size();
    std::vector<uint32_t> cover_count( nrows, 0u );
    std::vector<char> picked( ncols, 0 );
    std::size_t uncovered = nrows;

    auto const pick = [&]( uint32_t j ) {
      picked[j] = 1;
      for ( auto i : v.col_rows[j] )
      {
        uncovered -= cover_count[i]++ == 0u ? 1u : 0u;
      }
    };

    for ( auto j = 0u; j < ncols; ++j )
    {
      if ( rc[j] < 0.0 )
      {
        pick( j );
      }
    }
    while ( uncovered > 0u )
    {
      double best_score = std::numeric_limits<double>::max();
      uint32_t best_col = 0u;
      for ( auto j = 0u; j < ncols; ++j )
      {
        if ( picked[j] )
        {
          continue;
        }
        uint32_t gain = 0u;
        for ( auto i : v.col_rows[j] )
        {
          gain += cover_count[i] == 0u ? 1u : 0u;
        }
        if ( gain == 0u )
        {
          continue;
        }
        auto const score = std::max( rc[j], 0.0 ) / gain + static_cast<double>( costs_[nd.cols[j]] ) * 1e-9 / gain;
        if ( score < best_score )
        {
          best_score = score;
          best_col = j;
        }
      }
      pick( best_col );
    }

    /* drop redundant columns, most expensive first */
    std::vector<uint32_t> order;
    for ( auto j = 0u; j < ncols; ++j )
    {
      if ( picked[j] )
      {
        order.push_back( j );
      }
    }
    std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) {
      return costs_[nd.cols[a]] > costs_[nd.cols[b]];
    } );
    auto chosen = nd.chosen;
    auto cost = nd.cost;
    for ( auto j : order )
    {
      if ( std::all_of( v.col_rows[j].begin(), v.col_rows[j].end(), [&]( auto i ) { return cover_count[i] > 1u; } ) )
      {
        for ( auto i : v.col_rows[j] )
        {
          --cover_count[i];
        }
        continue;
      }
      chosen.push_back( nd.cols[j] );
      cost += costs_[nd.cols[j]];
    }
    record( chosen, cost );
  }

  void search( node nd, std::vector<double> u, std::vector<double> u_count, bool root )
  {
    while ( true )
    {
      if ( !reduce( nd ) || nd.chosen.size() > max_columns_ )
      {
        return;
      }
      if ( nd.cost >= best_cost_ )
      {
        return;
      }
      if ( none( nd.rows_left ) )
      {
        record( nd.chosen, nd.cost );
        return;
      }

      auto const v = make_view( nd );
      auto const ncols = nd.cols.size();
      auto const iterations = root ? 1000u : 400u;
      std::vector<double> cost( ncols );
      for ( auto j = 0u; j < ncols; ++j )
      {
        cost[j] = static_cast<double>( costs_[nd.cols[j]] );
      }

      std::vector<double> rc;
      if ( best_cost_ == std::numeric_limits<uint64_t>::max() )
      {
        /* plain greedy gives the first incumbent, which scales the subgradient steps */
        primal_heuristic( nd, v, cost );
      }

      /* column count bound, only when capped */
      std::vector<double> rc_count;
      double count_bound = 0.0;
      double const count_limit = static_cast<double>( max_columns_ - nd.chosen.size() ) + 1e-6;
      if ( capped() )
      {
        std::vector<double> const ones( ncols, 1.0 );
        count_bound = lagrangian( v, ones, u_count, rc_count, iterations, count_limit, count_limit );
        if ( count_bound > count_limit )
        {
          return;
        }
      }

      auto const cost_room = cost_limit() - static_cast<double>( nd.cost );
      auto const bound = lagrangian( v, cost, u, rc, iterations, cost_room + 1.0, cost_room );
      primal_heuristic( nd, v, rc );
      if ( prunable( static_cast<double>( nd.cost ) + bound ) )
      {
        return;
      }

      /* reduced-cost fixing */
      auto const room = cost_limit() - static_cast<double>( nd.cost ) - bound;
      std::vector<uint32_t> kept;
      std::vector<uint32_t> forced;
      for ( auto j = 0u; j < ncols; ++j )
      {
        auto const excluded_by_cost = rc[j] > room;
        auto const forced_by_cost = -rc[j] > room;
        auto const excluded_by_count = capped() && count_bound + rc_count[j] > count_limit;
        auto const forced_by_count = capped() && count_bound - rc_count[j] > count_limit;
        if ( excluded_by_cost || excluded_by_count )
        {
          continue;
        }
        if ( forced_by_cost || forced_by_count )
        {
          forced.push_back( nd.cols[j] );
          continue;
        }
        kept.push_back( nd.cols[j] );
      }
      if ( kept.size() < ncols )
      {
        nd.cols = std::move( kept );
        for ( auto c : forced )
        {
          choose( nd, c );
        }
        root = false;
        continue;
      }

      /* branch on the row with the fewest columns, cheapest reduced cost first */
      uint32_t pivot = 0u;
      for ( auto i = 1u; i < v.rows.size(); ++i )
      {
        if ( v.row_cols[i].size() < v.row_cols[pivot].size() )
        {
          pivot = i;
        }
      }
      auto branch = v.row_cols[pivot];
      std::stable_sort( branch.begin(), branch.end(), [&]( auto a, auto b ) { return rc[a] < rc[b]; } );

      std::vector<char> excluded( col_rows_.size(), 0 );
      for ( auto j : branch )
      {
        auto const c = nd.cols[j];
        excluded[c] = 1;
        node child;
        child.rows_left = nd.rows_left;
        child.chosen = nd.chosen;
        child.cost = nd.cost;
        for ( auto other : nd.cols )
        {
          if ( !excluded[other] )
          {
            child.cols.push_back( other );
          }
        }
        choose( child, c );
        search( std::move( child ), u, u_count, false );
      }
      return;
    }
  }

  std::vector<bitset> col_rows_;
  std::vector<uint64_t> costs_;
  uint32_t num_rows_;
  uint32_t row_words_;
  std::size_t max_columns_;

  std::vector<uint32_t> best_;
  uint64_t best_cost_{ std::numeric_limits<uint64_t>::max() };
};

/* Evaluates a cover by grouping cubes with equal masks. */
class grouped_cover
{
public:
  explicit grouped_cover( cover const& f )
  {
    for ( auto const& q : f.cubes )
    {
      groups_[q.fixed_mask].push_back( q.fixed_values );
    }
    for ( auto& [mask, values] : groups_ )
    {
      std::sort( values.begin(), values.end() );
    }
  }

  bool operator()( coordinate c ) const
  {
    for ( auto const& [mask, values] : groups_ )
    {
      if ( std::binary_search( values.begin(), values.end(), c & mask ) )
      {
        return true;
      }
    }
    return false;
  }

private:
  std::map<coordinate, std::vector<coordinate>> groups_;
};

} // namespace detail

prime_set qm_primes( truth_function const& f )
{
  auto const n = f.num_vars();
  if ( n > qm_prime_limit )
  {
    throw oracle_limit_error( "oracle limit exceeded: prime generation supports n <= " + std::to_string( qm_prime_limit ) );
  }

  auto const key = []( coordinate mask, coordinate values ) { return ( uint64_t{ mask } << 32u ) | values; };

  prime_set result;
  result.n = n;

  /* every level holds cubes with the same number of free positions */
  std::vector<uint64_t> level;
  for ( auto c : f.on_set() )
  {
    level.push_back( key( universe_mask( n ), c ) );
  }

  while ( !level.empty() )
  {
    std::unordered_set<uint64_t> present( level.begin(), level.end() );
    std::unordered_set<uint64_t> merged;
    std::unordered_set<uint64_t> next;

    for ( auto k : level )
    {
      auto const mask = static_cast<coordinate>( k >> 32u );
      auto const values = static_cast<coordinate>( k );
      for ( auto var = 0u; var < n; ++var )
      {
        auto const bit = variable_bit( n, var );
        if ( !( mask & bit ) || ( values & bit ) )
        {
          continue;
        }
        auto const partner = key( mask, values | bit );
        if ( present.count( partner ) )
        {
          merged.insert( k );
          merged.insert( partner );
          next.insert( key( mask & ~bit, values ) );
        }
      }
    }

    for ( auto k : level )
    {
      if ( !merged.count( k ) )
      {
        result.primes.emplace_back( n, static_cast<coordinate>( k >> 32u ), static_cast<coordinate>( k ) );
      }
    }
    level.assign( next.begin(), next.end() );
  }

  std::sort( result.primes.begin(), result.primes.end(), []( auto const& a, auto const& b ) {
    return a.fixed_mask != b.fixed_mask ? a.fixed_mask < b.fixed_mask : a.fixed_values < b.fixed_values;
  } );
  return result;
}

cover qm_minimum_cover( truth_function const& f )
{
  auto const n = f.num_vars();
  if ( n > qm_cover_limit )
  {
    throw oracle_limit_error( "oracle limit exceeded: exact cover supports n <= " + std::to_string( qm_cover_limit ) );
  }

  cover result;
  result.n = n;
  if ( f.num_ones() == 0u )
  {
    return result;
  }

  auto const primes = qm_primes( f );
  auto const num_rows = static_cast<uint32_t>( f.num_ones() );
  auto const words = ( num_rows + 63u ) / 64u;

  std::vector<detail::bitset> col_rows;
  std::vector<uint64_t> literals;
  for ( auto const& p : primes.primes )
  {
    detail::bitset rows( words, 0u );
    p.foreach_member( [&]( coordinate c ) {
      detail::set_bit( rows, static_cast<uint32_t>( *f.index_of( c ) ) );
    } );
    col_rows.push_back( std::move( rows ) );
    literals.push_back( p.num_literals() );
  }

  /* fewest cubes first, then fewest literals among covers of that size */
  detail::covering_solver by_count( col_rows, std::vector<uint64_t>( literals.size(), 1u ), num_rows );
  auto const smallest = by_count.solve();

  detail::covering_solver by_literals( std::move( col_rows ), std::move( literals ), num_rows, smallest.size() );
  by_literals.set_incumbent( smallest );
  for ( auto c : by_literals.solve() )
  {
    result.cubes.push_back( primes.primes[c] );
  }
  return result;
}

equivalence_result equivalent( truth_function const& f, cover const& cv, equivalence_options const& opts )
{
  auto const n = f.num_vars();
  if ( cv.n != n )
  {
    throw std::invalid_argument( "cover and function dimensions differ" );
  }

  equivalence_result result;
  if ( n <= exhaustive_check_limit )
  {
    result.mode = check_mode::exhaustive;
    auto const points = uint64_t{ 1 } << n;
    auto const words = ( points + 63u ) / 64u;
    detail::bitset covered( words, 0u );
    detail::bitset on( words, 0u );
    for ( auto const& q : cv.cubes )
    {
      q.foreach_member( [&]( coordinate c ) { detail::set_bit( covered, c ); } );
    }
    for ( auto c : f.on_set() )
    {
      detail::set_bit( on, c );
    }
    result.points_checked = points;
    for ( auto w = 0u; w < words; ++w )
    {
      if ( auto const diff = covered[w] ^ on[w] )
      {
        result.counterexample = static_cast<coordinate>( w * 64u + static_cast<uint32_t>( std::countr_zero( diff ) ) );
        return result;
      }
    }
    result.equivalent = true;
    return result;
  }

  result.mode = check_mode::sampled;
  detail::grouped_cover const eval( cv );
  for ( auto c : f.on_set() )
  {
    ++result.points_checked;
    if ( !eval( c ) )
    {
      result.counterexample = c;
      return result;
    }
  }

  std::mt19937_64 rng( opts.seed );
  auto const off_points = f.num_points() - f.num_ones();
  auto const wanted = std::min<uint64_t>( opts.off_samples, off_points );
  uint64_t drawn = 0u;
  for ( uint64_t attempts = 0u; drawn < wanted && attempts < 64u * opts.off_samples; ++attempts )
  {
    auto const c = static_cast<coordinate>( rng() >> ( 64u - n ) );
    if ( f.is_on( c ) )
    {
      continue;
    }
    ++drawn;
    ++result.points_checked;
    if ( eval( c ) )
    {
      result.counterexample = c;
      return result;
    }
  }
  result.equivalent = true;
  return result;
}

std::size_t count_redundant_cubes( cover const& cv )
{
  std::size_t redundant = 0;
  for ( auto i = 0u; i < cv.cubes.size(); ++i )
  {
    bool all_covered = true;
    cv.cubes[i].foreach_member( [&]( coordinate c ) {
      if ( !all_covered )
      {
        return;
      }
      bool found = false;
      for ( auto j = 0u; j < cv.cubes.size() && !found; ++j )
      {
        found = j != i && cv.cubes[j].contains( c );
      }
      all_covered = found;
    } );
    redundant += all_covered ? 1u : 0u;
  }
  return redundant;
}

char const* to_string( check_mode mode )
{
  return mode == check_mode::exhaustive ? "exhaustive" : "sampled";
}

} // namespace cffmin
