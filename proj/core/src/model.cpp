#include <cffmin/model.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cffmin
{

void check_dimension( uint32_t n )
{
  if ( n < 1u || n > max_dimension )
  {
    throw std::invalid_argument( "dimension must be in [1, " + std::to_string( max_dimension ) + "], got " + std::to_string( n ) );
  }
}

bool adjacent( coordinate a, coordinate b, uint32_t n )
{
  return std::popcount( ( a ^ b ) & universe_mask( n ) ) == 1;
}

std::vector<coordinate> neighbors( coordinate c, uint32_t n )
{
  std::vector<coordinate> result;
  result.reserve( n );
  for ( auto var = 0u; var < n; ++var )
  {
    result.push_back( c ^ variable_bit( n, var ) );
  }
  return result;
}

std::string coordinate_to_string( coordinate c, uint32_t n )
{
  std::string text( n, '0' );
  for ( auto var = 0u; var < n; ++var )
  {
    if ( c & variable_bit( n, var ) )
    {
      text[var] = '1';
    }
  }
  return text;
}

coordinate coordinate_from_string( std::string_view text )
{
  check_dimension( static_cast<uint32_t>( text.size() ) );
  coordinate c = 0u;
  for ( auto ch : text )
  {
    if ( ch != '0' && ch != '1' )
    {
      throw std::invalid_argument( "coordinate may only contain '0' and '1': " + std::string( text ) );
    }
    c = ( c << 1u ) | ( ch == '1' ? 1u : 0u );
  }
  return c;
}

std::vector<std::string> default_variable_names( uint32_t n )
{
  std::vector<std::string> names;
  names.reserve( n );
  for ( auto var = 0u; var < n; ++var )
  {
    if ( n <= 26u )
    {
      names.emplace_back( 1u, static_cast<char>( 'A' + var ) );
    }
    else
    {
      names.push_back( "x" + std::to_string( var ) );
    }
  }
  return names;
}

cube::cube( uint32_t n, coordinate fixed_mask, coordinate fixed_values )
    : n( n ), fixed_mask( fixed_mask ), fixed_values( fixed_values )
{
  check_dimension( n );
  if ( ( fixed_mask & ~universe_mask( n ) ) != 0u )
  {
    throw std::invalid_argument( "cube mask exceeds dimension" );
  }
  if ( ( fixed_values & ~fixed_mask ) != 0u )
  {
    throw std::invalid_argument( "cube values must be zero on free positions" );
  }
}

cube cube::minterm( coordinate c, uint32_t n )
{
  return cube( n, universe_mask( n ), c );
}

cube cube::universe( uint32_t n )
{
  return cube( n, 0u, 0u );
}

uint32_t cube::num_free() const
{
  return static_cast<uint32_t>( std::popcount( free_mask() ) );
}

uint32_t cube::num_literals() const
{
  return static_cast<uint32_t>( std::popcount( fixed_mask ) );
}

bool cube::contains( cube const& other ) const
{
  /* every position fixed here must be fixed to the same value in other */
  return ( other.fixed_mask & fixed_mask ) == fixed_mask && ( other.fixed_values & fixed_mask ) == fixed_values;
}

std::vector<coordinate> cube_members( cube const& q )
{
  std::vector<coordinate> members;
  members.reserve( q.size() );
  q.foreach_member( [&]( coordinate c ) { members.push_back( c ); } );
  return members;
}

std::string cube_expression( cube const& q, std::span<std::string const> names )
{
  if ( names.size() != q.n )
  {
    throw std::invalid_argument( "expected " + std::to_string( q.n ) + " variable names" );
  }
  if ( q.fixed_mask == 0u )
  {
    return "1";
  }
  std::string term;
  for ( auto var = 0u; var < q.n; ++var )
  {
    auto const bit = variable_bit( q.n, var );
    if ( q.fixed_mask & bit )
    {
      term += names[var];
      if ( !( q.fixed_values & bit ) )
      {
        term += '\'';
      }
    }
  }
  return term;
}

std::string cube_expression( cube const& q )
{
  auto const names = default_variable_names( q.n );
  return cube_expression( q, names );
}

bool evaluate( cover const& f, coordinate c )
{
  return std::any_of( f.cubes.begin(), f.cubes.end(), [c]( auto const& q ) { return q.contains( c ); } );
}

uint64_t literal_count( cover const& f )
{
  uint64_t total = 0u;
  for ( auto const& q : f.cubes )
  {
    total += q.num_literals();
  }
  return total;
}

truth_function::truth_function( uint32_t n, std::vector<coordinate> on_set )
    : n_( n ), on_set_( std::move( on_set ) )
{
  check_dimension( n );
  std::sort( on_set_.begin(), on_set_.end() );
  on_set_.erase( std::unique( on_set_.begin(), on_set_.end() ), on_set_.end() );
  if ( !on_set_.empty() && on_set_.back() > universe_mask( n ) )
  {
    throw std::invalid_argument( "ON coordinate " + std::to_string( on_set_.back() ) + " does not fit in " + std::to_string( n ) + " bits" );
  }
}

truth_function truth_function::constant( uint32_t n, bool value )
{
  check_dimension( n );
  std::vector<coordinate> on;
  if ( value )
  {
    on.resize( uint64_t{ 1 } << n );
    for ( coordinate c = 0u; c < on.size(); ++c )
    {
      on[c] = c;
    }
  }
  return truth_function( n, std::move( on ) );
}

bool truth_function::is_on( coordinate c ) const
{
  return std::binary_search( on_set_.begin(), on_set_.end(), c );
}

std::optional<std::size_t> truth_function::index_of( coordinate c ) const
{
  auto const it = std::lower_bound( on_set_.begin(), on_set_.end(), c );
  if ( it == on_set_.end() || *it != c )
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>( it - on_set_.begin() );
}

} // namespace cffmin
