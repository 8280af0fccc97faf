#include <cffmin/pla.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace cffmin
{

namespace
{

std::vector<std::string_view> split_lines( std::string_view text )
{
  std::vector<std::string_view> lines;
  while ( !text.empty() )
  {
    auto const eol = text.find( '\n' );
    auto line = text.substr( 0, eol );
    if ( !line.empty() && line.back() == '\r' )
    {
      line.remove_suffix( 1 );
    }
    lines.push_back( line );
    if ( eol == std::string_view::npos )
    {
      break;
    }
    text.remove_prefix( eol + 1 );
  }
  return lines;
}

std::string_view strip_comment( std::string_view line )
{
  if ( auto const pos = line.find( '#' ); pos != std::string_view::npos )
  {
    line = line.substr( 0, pos );
  }
  return line;
}

std::vector<std::string> tokenize( std::string_view line )
{
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && std::isspace( static_cast<unsigned char>( line[i] ) ) )
    {
      ++i;
    }
    auto const start = i;
    while ( i < line.size() && !std::isspace( static_cast<unsigned char>( line[i] ) ) )
    {
      ++i;
    }
    if ( i > start )
    {
      tokens.emplace_back( line.substr( start, i - start ) );
    }
  }
  return tokens;
}

uint32_t parse_count( std::string const& token, std::size_t line, char const* what )
{
  uint32_t value = 0;
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
  {
    throw parse_error( line, std::string( "invalid " ) + what + " '" + token + "'" );
  }
  return value;
}

void check_row_chars( std::string const& field, std::size_t line, char const* what )
{
  for ( auto ch : field )
  {
    if ( ch != '0' && ch != '1' && ch != '-' )
    {
      throw parse_error( line, std::string( "illegal character '" ) + ch + "' in " + what );
    }
  }
}

cube pattern_to_cube( std::string const& inputs )
{
  auto const n = static_cast<uint32_t>( inputs.size() );
  coordinate mask = 0u;
  coordinate values = 0u;
  for ( auto var = 0u; var < n; ++var )
  {
    auto const bit = variable_bit( n, var );
    if ( inputs[var] != '-' )
    {
      mask |= bit;
      values |= inputs[var] == '1' ? bit : 0u;
    }
  }
  return cube( n, mask, values );
}

/* Invokes fn for every coordinate matched by a {0,1,-} input pattern. */
template<typename Fn>
void expand_inputs( std::string const& inputs, Fn&& fn )
{
  pattern_to_cube( inputs ).foreach_member( fn );
}

void check_output_index( pla_document const& doc, uint32_t output_index )
{
  if ( output_index >= doc.num_outputs )
  {
    throw std::out_of_range( "output index " + std::to_string( output_index ) + " out of range (document has " + std::to_string( doc.num_outputs ) + " outputs)" );
  }
}

} // namespace

pla_document parse_pla( std::string_view text )
{
  pla_document doc;
  bool have_inputs = false;
  bool have_outputs = false;
  auto const lines = split_lines( text );
  std::size_t line_no = 0;

  for ( auto raw : lines )
  {
    ++line_no;
    auto const tokens = tokenize( strip_comment( raw ) );
    if ( tokens.empty() )
    {
      continue;
    }

    auto const& head = tokens.front();
    if ( head.front() == '.' )
    {
      if ( head == ".i" || head == ".o" )
      {
        if ( tokens.size() != 2u )
        {
          throw parse_error( line_no, head + " expects one argument" );
        }
        auto const value = parse_count( tokens[1], line_no, head.c_str() );
        if ( value == 0u )
        {
          throw parse_error( line_no, head + " must be at least 1" );
        }
        ( head == ".i" ? doc.num_inputs : doc.num_outputs ) = value;
        ( head == ".i" ? have_inputs : have_outputs ) = true;
      }
      else if ( head == ".ilb" )
      {
        doc.input_labels.assign( tokens.begin() + 1, tokens.end() );
      }
      else if ( head == ".ob" )
      {
        doc.output_labels.assign( tokens.begin() + 1, tokens.end() );
      }
      else if ( head == ".p" )
      {
        if ( tokens.size() != 2u )
        {
          throw parse_error( line_no, ".p expects one argument" );
        }
        parse_count( tokens[1], line_no, ".p" );
      }
      else if ( head == ".type" )
      {
        if ( tokens.size() != 2u )
        {
          throw parse_error( line_no, ".type expects one argument" );
        }
        doc.type = tokens[1];
      }
      else if ( head == ".e" || head == ".end" )
      {
        break;
      }
      else
      {
        doc.annotations.emplace_back( strip_comment( raw ) );
      }
      continue;
    }

    if ( !have_inputs || !have_outputs )
    {
      throw parse_error( line_no, "row before .i/.o declarations" );
    }

    pla_row row;
    if ( tokens.size() == 2u )
    {
      row.inputs = tokens[0];
      row.outputs = tokens[1];
    }
    else if ( tokens.size() == 1u && tokens[0].size() == std::size_t{ doc.num_inputs } + doc.num_outputs )
    {
      row.inputs = tokens[0].substr( 0, doc.num_inputs );
      row.outputs = tokens[0].substr( doc.num_inputs );
    }
    else
    {
      throw parse_error( line_no, "expected '<inputs> <outputs>'" );
    }

    if ( row.inputs.size() != doc.num_inputs )
    {
      throw parse_error( line_no, "input width " + std::to_string( row.inputs.size() ) + " does not match .i " + std::to_string( doc.num_inputs ) );
    }
    if ( row.outputs.size() != doc.num_outputs )
    {
      throw parse_error( line_no, "output width " + std::to_string( row.outputs.size() ) + " does not match .o " + std::to_string( doc.num_outputs ) );
    }
    check_row_chars( row.inputs, line_no, "inputs" );
    check_row_chars( row.outputs, line_no, "outputs" );
    doc.rows.push_back( std::move( row ) );
  }

  if ( !have_inputs )
  {
    throw parse_error( line_no, "missing .i directive" );
  }
  if ( !have_outputs )
  {
    throw parse_error( line_no, "missing .o directive" );
  }
  if ( !doc.input_labels.empty() && doc.input_labels.size() != doc.num_inputs )
  {
    throw parse_error( line_no, ".ilb lists " + std::to_string( doc.input_labels.size() ) + " labels for " + std::to_string( doc.num_inputs ) + " inputs" );
  }
  if ( !doc.output_labels.empty() && doc.output_labels.size() != doc.num_outputs )
  {
    throw parse_error( line_no, ".ob lists " + std::to_string( doc.output_labels.size() ) + " labels for " + std::to_string( doc.num_outputs ) + " outputs" );
  }
  return doc;
}

std::string write_pla( pla_document const& doc )
{
  std::ostringstream os;
  os << ".i " << doc.num_inputs << '\n';
  os << ".o " << doc.num_outputs << '\n';
  auto const write_labels = [&]( char const* directive, auto const& labels ) {
    if ( labels.empty() )
    {
      return;
    }
    os << directive;
    for ( auto const& l : labels )
    {
      os << ' ' << l;
    }
    os << '\n';
  };
  write_labels( ".ilb", doc.input_labels );
  write_labels( ".ob", doc.output_labels );
  if ( doc.type )
  {
    os << ".type " << *doc.type << '\n';
  }
  for ( auto const& a : doc.annotations )
  {
    os << a << '\n';
  }
  os << ".p " << doc.rows.size() << '\n';
  for ( auto const& row : doc.rows )
  {
    os << row.inputs << ' ' << row.outputs << '\n';
  }
  os << ".e\n";
  return os.str();
}

truth_function extract_function( pla_document const& doc, uint32_t output_index )
{
  check_output_index( doc, output_index );
  check_dimension( doc.num_inputs );

  std::vector<coordinate> on;
  for ( auto const& row : doc.rows )
  {
    if ( row.outputs[output_index] == '1' )
    {
      expand_inputs( row.inputs, [&]( coordinate c ) { on.push_back( c ); } );
    }
  }
  return truth_function( doc.num_inputs, std::move( on ) );
}

cover extract_cover( pla_document const& doc, uint32_t output_index )
{
  check_output_index( doc, output_index );
  check_dimension( doc.num_inputs );

  cover result;
  result.n = doc.num_inputs;
  for ( auto const& row : doc.rows )
  {
    if ( row.outputs[output_index] == '1' )
    {
      result.cubes.push_back( pattern_to_cube( row.inputs ) );
    }
  }
  return result;
}

uint64_t pla_literal_count( pla_document const& doc )
{
  uint64_t total = 0u;
  for ( auto const& row : doc.rows )
  {
    if ( row.outputs.find( '1' ) != std::string::npos )
    {
      total += static_cast<uint64_t>( std::count_if( row.inputs.begin(), row.inputs.end(), []( char ch ) { return ch != '-'; } ) );
    }
  }
  return total;
}

pla_document function_to_pla( truth_function const& f )
{
  pla_document doc;
  doc.num_inputs = f.num_vars();
  doc.num_outputs = 1u;
  for ( auto c : f.on_set() )
  {
    doc.rows.push_back( { coordinate_to_string( c, f.num_vars() ), "1" } );
  }
  return doc;
}

std::string cover_pla_row( cube const& q )
{
  std::string row( q.n, '-' );
  for ( auto var = 0u; var < q.n; ++var )
  {
    auto const bit = variable_bit( q.n, var );
    if ( q.fixed_mask & bit )
    {
      row[var] = ( q.fixed_values & bit ) ? '1' : '0';
    }
  }
  return row + " 1";
}

std::string write_cover_pla( cover const& cv )
{
  std::ostringstream os;
  os << ".i " << cv.n << '\n'
     << ".o 1\n"
     << ".p " << cv.cubes.size() << '\n';
  for ( auto const& q : cv.cubes )
  {
    os << cover_pla_row( q ) << '\n';
  }
  os << ".e\n";
  return os.str();
}

std::string write_cover_sop( cover const& cv, std::span<std::string const> names )
{
  if ( cv.cubes.empty() )
  {
    return "0";
  }
  std::string text;
  for ( auto const& q : cv.cubes )
  {
    if ( !text.empty() )
    {
      text += " + ";
    }
    text += cube_expression( q, names );
  }
  return text;
}

std::string write_cover_sop( cover const& cv )
{
  auto const names = default_variable_names( cv.n );
  return write_cover_sop( cv, names );
}

cover parse_sop( std::string_view text, uint32_t n, std::span<std::string const> names )
{
  check_dimension( n );
  if ( names.size() != n )
  {
    throw std::invalid_argument( "expected " + std::to_string( n ) + " variable names" );
  }

  std::string compact;
  for ( auto ch : text )
  {
    if ( !std::isspace( static_cast<unsigned char>( ch ) ) )
    {
      compact += ch;
    }
  }

  cover result;
  result.n = n;
  if ( compact == "0" )
  {
    return result;
  }
  if ( compact.empty() )
  {
    throw parse_error( 1, "empty expression" );
  }

  std::string_view rest( compact );
  while ( true )
  {
    auto const plus = rest.find( '+' );
    auto const term = rest.substr( 0, plus );
    if ( term.empty() )
    {
      throw parse_error( 1, "empty product term" );
    }

    coordinate mask = 0u;
    coordinate values = 0u;
    if ( term != "1" )
    {
      std::size_t pos = 0;
      while ( pos < term.size() )
      {
        /* longest variable name matching at pos */
        std::size_t best_len = 0;
        uint32_t best_var = 0;
        for ( auto var = 0u; var < n; ++var )
        {
          auto const& name = names[var];
          if ( name.size() > best_len && term.substr( pos, name.size() ) == name )
          {
            best_len = name.size();
            best_var = var;
          }
        }
        if ( best_len == 0 )
        {
          throw parse_error( 1, "unknown literal at '" + std::string( term.substr( pos ) ) + "'" );
        }
        pos += best_len;
        bool positive = true;
        if ( pos < term.size() && term[pos] == '\'' )
        {
          positive = false;
          ++pos;
        }
        auto const bit = variable_bit( n, best_var );
        auto const value = positive ? bit : 0u;
        if ( ( mask & bit ) && ( values & bit ) != value )
        {
          throw parse_error( 1, "contradictory literals for " + names[best_var] + " in '" + std::string( term ) + "'" );
        }
        mask |= bit;
        values |= value;
      }
    }
    result.cubes.emplace_back( n, mask, values );

    if ( plus == std::string_view::npos )
    {
      break;
    }
    rest.remove_prefix( plus + 1 );
  }
  return result;
}

cover parse_sop( std::string_view text, uint32_t n )
{
  auto const names = default_variable_names( n );
  return parse_sop( text, n, names );
}

truth_function parse_truth_table( std::string_view text )
{
  std::optional<uint32_t> n;
  std::vector<coordinate> on;
  std::size_t line_no = 0;
  for ( auto raw : split_lines( text ) )
  {
    ++line_no;
    auto const tokens = tokenize( strip_comment( raw ) );
    if ( tokens.empty() )
    {
      continue;
    }
    if ( tokens.size() != 2u || tokens[1].size() != 1u )
    {
      throw parse_error( line_no, "expected '<input bits> <output bit>'" );
    }
    auto const& inputs = tokens[0];
    if ( !n )
    {
      if ( inputs.size() < 1u || inputs.size() > max_dimension )
      {
        throw parse_error( line_no, "input width must be in [1, " + std::to_string( max_dimension ) + "]" );
      }
      n = static_cast<uint32_t>( inputs.size() );
    }
    else if ( inputs.size() != *n )
    {
      throw parse_error( line_no, "input width " + std::to_string( inputs.size() ) + " differs from " + std::to_string( *n ) );
    }
    if ( inputs.find_first_not_of( "01" ) != std::string::npos )
    {
      throw parse_error( line_no, "illegal character in inputs '" + inputs + "'" );
    }
    auto const out = tokens[1][0];
    if ( out != '0' && out != '1' )
    {
      throw parse_error( line_no, std::string( "illegal output '" ) + out + "'" );
    }
    if ( out == '1' )
    {
      on.push_back( coordinate_from_string( inputs ) );
    }
  }
  if ( !n )
  {
    throw parse_error( line_no, "truth table has no rows" );
  }
  return truth_function( *n, std::move( on ) );
}

std::string write_truth_table( truth_function const& f )
{
  std::string text;
  auto const n = f.num_vars();
  auto const on = f.on_set();
  std::size_t next = 0;
  for ( uint64_t c = 0; c < f.num_points(); ++c )
  {
    bool const is_on = next < on.size() && on[next] == c;
    if ( is_on )
    {
      ++next;
    }
    text += coordinate_to_string( static_cast<coordinate>( c ), n );
    text += is_on ? " 1\n" : " 0\n";
  }
  return text;
}

truth_function parse_minterms( std::string_view text )
{
  std::optional<uint32_t> n;
  std::vector<coordinate> on;
  std::size_t line_no = 0;
  for ( auto raw : split_lines( text ) )
  {
    ++line_no;
    auto const tokens = tokenize( strip_comment( raw ) );
    if ( tokens.empty() )
    {
      continue;
    }
    if ( tokens.size() != 1u )
    {
      throw parse_error( line_no, "expected one value per line" );
    }
    auto const& token = tokens[0];
    if ( !n )
    {
      if ( token.rfind( "n=", 0 ) != 0 )
      {
        throw parse_error( line_no, "missing 'n=<dims>' header" );
      }
      auto const dims = parse_count( token.substr( 2 ), line_no, "dimension" );
      if ( dims < 1u || dims > max_dimension )
      {
        throw parse_error( line_no, "dimension must be in [1, " + std::to_string( max_dimension ) + "]" );
      }
      n = dims;
      continue;
    }
    auto const index = parse_count( token, line_no, "minterm index" );
    if ( index > universe_mask( *n ) )
    {
      throw parse_error( line_no, "minterm " + token + " out of range for n=" + std::to_string( *n ) );
    }
    on.push_back( index );
  }
  if ( !n )
  {
    throw parse_error( line_no, "missing 'n=<dims>' header" );
  }
  return truth_function( *n, std::move( on ) );
}

std::string write_minterms( truth_function const& f )
{
  std::string text = "n=" + std::to_string( f.num_vars() ) + "\n";
  for ( auto c : f.on_set() )
  {
    text += std::to_string( c );
    text += '\n';
  }
  return text;
}

} // namespace cffmin
