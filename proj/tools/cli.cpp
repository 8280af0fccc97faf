#include "cli.hpp"

#include <cffmin/bench.hpp>
#include <cffmin/datagen.hpp>
#include <cffmin/floodfill.hpp>
#include <cffmin/oracle.hpp>
#include <cffmin/pla.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cffmin::cli
{

namespace
{

/* usage problems detected after argument parsing */
class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/* parse error annotated with the file it came from */
class input_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class input_format
{
  automatic,
  pla,
  table,
  minterms
};

struct input_options
{
  std::string path;
  std::string format{ "auto" };
  uint32_t output_index{ 0 };
};

struct loaded_function
{
  truth_function f;
  std::vector<std::string> names;
};

std::string read_text( std::string const& path, std::istream& in )
{
  if ( path == "-" )
  {
    return { std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() };
  }
  std::ifstream file( path, std::ios::binary );
  if ( !file )
  {
    throw usage_error( "cannot open '" + path + "'" );
  }
  return { std::istreambuf_iterator<char>( file ), std::istreambuf_iterator<char>() };
}

input_format parse_format( std::string const& name )
{
  if ( name == "auto" )
    return input_format::automatic;
  if ( name == "pla" )
    return input_format::pla;
  if ( name == "table" )
    return input_format::table;
  if ( name == "minterms" )
    return input_format::minterms;
  throw usage_error( "unknown format '" + name + "'" );
}

/* first meaningful line decides: directives mean PLA, "n=" a minterm list */
input_format sniff_format( std::string_view text )
{
  std::istringstream is{ std::string( text ) };
  std::string line;
  while ( std::getline( is, line ) )
  {
    auto const first = line.find_first_not_of( " \t\r" );
    if ( first == std::string::npos || line[first] == '#' )
    {
      continue;
    }
    if ( line[first] == '.' )
    {
      return input_format::pla;
    }
    if ( line.compare( first, 2, "n=" ) == 0 )
    {
      return input_format::minterms;
    }
    return input_format::table;
  }
  return input_format::pla;
}

loaded_function load_function( input_options const& opts, std::istream& in )
{
  auto const text = read_text( opts.path, in );
  auto format = parse_format( opts.format );
  if ( format == input_format::automatic )
  {
    format = sniff_format( text );
  }

  try
  {
    switch ( format )
    {
    case input_format::pla:
    {
      auto const doc = parse_pla( text );
      if ( opts.output_index >= doc.num_outputs )
      {
        throw usage_error( "output index " + std::to_string( opts.output_index ) + " out of range (" +
                           std::to_string( doc.num_outputs ) + " outputs)" );
      }
      return { extract_function( doc, opts.output_index ), doc.input_labels };
    }
    case input_format::table:
    case input_format::minterms:
      if ( opts.output_index != 0u )
      {
        throw usage_error( "--output-index applies to PLA input only" );
      }
      return { format == input_format::table ? parse_truth_table( text ) : parse_minterms( text ), {} };
    default:
      break;
    }
  }
  catch ( parse_error const& e )
  {
    throw input_error( opts.path + ":" + e.what() );
  }
  throw usage_error( "unsupported format" );
}

std::ostream& open_output( std::string const& path, std::ostream& out, std::ofstream& file )
{
  if ( path.empty() || path == "-" )
  {
    return out;
  }
  file.open( path, std::ios::binary );
  if ( !file )
  {
    throw usage_error( "cannot write '" + path + "'" );
  }
  return file;
}

std::string format_seconds( double seconds )
{
  char buffer[32];
  std::snprintf( buffer, sizeof( buffer ), "%.6f", seconds );
  return buffer;
}

void write_cover( std::ostream& os, cover const& cv, std::string const& format, std::vector<std::string> const& names )
{
  if ( format == "pla" )
  {
    os << write_cover_pla( cv );
  }
  else if ( names.size() == cv.n )
  {
    os << write_cover_sop( cv, names ) << '\n';
  }
  else
  {
    os << write_cover_sop( cv ) << '\n';
  }
}

void add_input_options( CLI::App* cmd, input_options& opts )
{
  cmd->add_option( "input", opts.path, "Input file, '-' for standard input" )->required();
  cmd->add_option( "--format", opts.format, "Input format" )->check( CLI::IsMember( { "auto", "pla", "table", "minterms" } ) );
  cmd->add_option( "--output-index", opts.output_index, "PLA output to read" );
}

/* ---------------------------------------------------------------- minimize */

struct minimize_args
{
  input_options input;
  std::string out_format{ "sop" };
  std::string output;
  std::size_t budget{ std::numeric_limits<std::size_t>::max() };
  uint64_t seed{ 0 };
  bool shuffle{ false };
  bool verify{ true };
  bool oracle{ false };
};

int run_minimize( minimize_args const& a, std::istream& in, std::ostream& out, std::ostream& err )
{
  auto const [f, names] = load_function( a.input, in );

  sweep_options opts;
  opts.verify = a.verify;
  opts.minimize.subset_budget = a.budget;
  opts.minimize.deterministic = !a.shuffle;
  opts.minimize.seed = a.seed;

  cover cv;
  auto const record = measure( f, a.seed, "file", opts, &cv );

  std::ofstream file;
  auto& os = open_output( a.output, out, file );
  if ( a.out_format == "csv" )
  {
    write_csv_header( os );
    write_csv_row( os, record );
  }
  else
  {
    write_cover( os, cv, a.out_format, names );
    out << "implicants=" << record.num_implicants << " literals=" << record.num_literals
        << " time=" << format_seconds( record.elapsed_seconds ) << "s verified="
        << ( a.verify ? ( record.verified ? "true" : "false" ) : "skipped" ) << '\n';
  }

  if ( a.oracle )
  {
    auto const exact = qm_minimum_cover( f );
    auto const exact_literals = literal_count( exact );
    err << "oracle implicants=" << exact.size() << " literals=" << exact_literals;
    if ( exact_literals > 0u )
    {
      err << " literal_ratio=" << static_cast<double>( record.num_literals ) / static_cast<double>( exact_literals );
    }
    err << '\n';
  }

  if ( a.verify && !record.verified )
  {
    err << "error: minimized cover is not equivalent to the input\n";
    return exit_mismatch;
  }
  return exit_ok;
}

/* ------------------------------------------------------------------ verify */

struct verify_args
{
  input_options input;
  std::optional<std::string> cover_text;
  std::optional<std::string> cover_file;
  uint64_t seed{ 0 };
};

int run_verify( verify_args const& a, std::istream& in, std::ostream& out )
{
  if ( a.cover_text.has_value() == a.cover_file.has_value() )
  {
    throw usage_error( "exactly one of --cover and --cover-file is required" );
  }
  if ( a.input.path == "-" && a.cover_file == "-" )
  {
    throw usage_error( "input and cover cannot both come from standard input" );
  }
  auto const [f, names] = load_function( a.input, in );
  auto const n = f.num_vars();

  cover cv;
  std::string const source = a.cover_text ? std::string( "--cover" ) : *a.cover_file;
  try
  {
    auto const text = a.cover_text ? *a.cover_text : read_text( *a.cover_file, in );
    auto const first = text.find_first_not_of( " \t\r\n" );
    if ( first != std::string::npos && text[first] == '.' )
    {
      auto const doc = parse_pla( text );
      if ( doc.num_inputs != n )
      {
        throw usage_error( "cover has " + std::to_string( doc.num_inputs ) + " inputs, function has " + std::to_string( n ) );
      }
      cv = extract_cover( doc, 0u );
    }
    else if ( names.size() == n )
    {
      cv = parse_sop( text, n, names );
    }
    else
    {
      cv = parse_sop( text, n );
    }
  }
  catch ( parse_error const& e )
  {
    throw input_error( source + ":" + e.what() );
  }

  auto const result = equivalent( f, cv, { .seed = a.seed } );
  if ( result.equivalent )
  {
    out << "EQUIVALENT (" << to_string( result.mode ) << ", " << result.points_checked << " points)\n";
    return exit_ok;
  }
  out << "NOT-EQUIVALENT";
  if ( result.counterexample )
  {
    auto const c = *result.counterexample;
    out << " counterexample " << coordinate_to_string( c, n ) << " (function=" << ( f.is_on( c ) ? 1 : 0 )
        << " cover=" << ( evaluate( cv, c ) ? 1 : 0 ) << ")";
  }
  out << '\n';
  return exit_mismatch;
}

/* ---------------------------------------------------------------- generate */

struct generate_args
{
  uint32_t dims{ 0 };
  double density{ 0.0 };
  uint64_t seed{ 0 };
  std::string mode{ "exact" };
  std::string format{ "pla" };
  std::string output;
};

int run_generate( generate_args const& a, std::ostream& out )
{
  auto const f = generate( { .n = a.dims, .density = a.density, .seed = a.seed, .mode = gen_mode_from_string( a.mode ) } );
  std::ofstream file;
  auto& os = open_output( a.output, out, file );
  if ( a.format == "table" )
  {
    os << write_truth_table( f );
  }
  else if ( a.format == "minterms" )
  {
    os << write_minterms( f );
  }
  else
  {
    os << write_pla( function_to_pla( f ) );
  }
  return exit_ok;
}

/* ------------------------------------------------------------------ oracle */

struct oracle_args
{
  input_options input;
  std::string out_format{ "sop" };
  std::string output;
};

int run_oracle( oracle_args const& a, std::istream& in, std::ostream& out )
{
  auto const [f, names] = load_function( a.input, in );
  auto const start = std::chrono::steady_clock::now();
  auto const cv = qm_minimum_cover( f );
  auto const elapsed = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();

  std::ofstream file;
  auto& os = open_output( a.output, out, file );
  write_cover( os, cv, a.out_format, names );
  out << "implicants=" << cv.size() << " literals=" << literal_count( cv ) << " time=" << format_seconds( elapsed ) << "s\n";
  return exit_ok;
}

/* ------------------------------------------------------------------- bench */

struct bench_args
{
  std::optional<std::string> input;
  std::string format{ "auto" };
  std::vector<uint32_t> dims;
  std::optional<std::string> dims_range;
  std::vector<double> densities;
  std::size_t repeats{ 1 };
  uint64_t seed{ 0 };
  std::string mode{ "exact" };
  std::size_t budget{ std::numeric_limits<std::size_t>::max() };
  bool verify{ true };
  std::string csv;
};

std::vector<uint32_t> expand_range( std::string const& text )
{
  auto const colon = text.find( ':' );
  if ( colon == std::string::npos )
  {
    throw usage_error( "--dims-range expects <first>:<last>" );
  }
  uint32_t first = 0u;
  uint32_t last = 0u;
  try
  {
    std::size_t used = 0u;
    first = static_cast<uint32_t>( std::stoul( text.substr( 0, colon ), &used ) );
    if ( used != colon )
      throw std::invalid_argument( "" );
    auto const rest = text.substr( colon + 1u );
    last = static_cast<uint32_t>( std::stoul( rest, &used ) );
    if ( used != rest.size() )
      throw std::invalid_argument( "" );
  }
  catch ( std::logic_error const& )
  {
    throw usage_error( "--dims-range expects <first>:<last>" );
  }
  if ( first > last )
  {
    throw usage_error( "--dims-range is empty" );
  }
  std::vector<uint32_t> dims;
  for ( auto d = first; d <= last; ++d )
  {
    dims.push_back( d );
  }
  return dims;
}

int run_bench_file( bench_args const& a, sweep_options const& opts, std::istream& in, std::ostream& os, std::ostream& err )
{
  auto const text = read_text( *a.input, in );
  pla_document doc;
  try
  {
    doc = parse_pla( text );
  }
  catch ( parse_error const& e )
  {
    throw input_error( *a.input + ":" + e.what() );
  }

  std::vector<cover> covers;
  bool all_verified = true;
  write_csv_header( os );
  for ( auto o = 0u; o < doc.num_outputs; ++o )
  {
    auto const f = extract_function( doc, o );
    cover cv;
    auto const record = measure( f, a.seed, "file", opts, &cv );
    write_csv_row( os, record );
    all_verified = all_verified && ( !opts.verify || record.verified );
    covers.push_back( std::move( cv ) );
  }

  auto const merged = consolidate_multi( covers, doc.num_inputs );
  auto const original = pla_literal_count( doc );
  auto const minimized = literal_count( merged );
  err << "outputs=" << doc.num_outputs << " original_literals=" << original << " consolidated_implicants=" << merged.size()
      << " consolidated_literals=" << minimized;
  if ( original > 0u )
  {
    char buffer[32];
    std::snprintf( buffer, sizeof( buffer ), "%.7f", reduction_percent( original, minimized ) );
    err << " reduction=" << buffer << '%';
  }
  err << '\n';
  return all_verified ? exit_ok : exit_mismatch;
}

int run_bench( bench_args const& a, std::istream& in, std::ostream& out, std::ostream& err )
{
  sweep_options opts;
  opts.mode = gen_mode_from_string( a.mode );
  opts.verify = a.verify;
  opts.minimize.subset_budget = a.budget;

  std::ofstream file;
  auto& os = open_output( a.csv, out, file );

  if ( a.input )
  {
    if ( !a.dims.empty() || a.dims_range || !a.densities.empty() )
    {
      throw usage_error( "sweep parameters cannot be combined with an input file" );
    }
    return run_bench_file( a, opts, in, os, err );
  }

  auto dims = a.dims;
  if ( a.dims_range )
  {
    auto const range = expand_range( *a.dims_range );
    dims.insert( dims.end(), range.begin(), range.end() );
  }
  if ( dims.empty() || a.densities.empty() )
  {
    throw usage_error( "bench needs --dims or --dims-range and --densities, or an input file" );
  }

  bool all_verified = true;
  write_csv_header( os );
  for ( auto d : dims )
  {
    /* one sweep per dimension keeps output flowing on long runs */
    uint32_t const one[] = { d };
    for ( auto const& r : sweep( one, a.densities, a.repeats, a.seed, opts ) )
    {
      write_csv_row( os, r );
      all_verified = all_verified && ( !opts.verify || r.verified );
    }
    os.flush();
  }
  return all_verified ? exit_ok : exit_mismatch;
}

} // namespace

int run( std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Two-level minimization of single-output Boolean functions by conditional flood fill", "cffmin" };
  app.require_subcommand( 1 );

  minimize_args min_a;
  auto* min_cmd = app.add_subcommand( "minimize", "Minimize a function and print its cover" );
  add_input_options( min_cmd, min_a.input );
  min_cmd->add_option( "--out", min_a.out_format, "Output format" )->check( CLI::IsMember( { "sop", "pla", "csv" } ) );
  min_cmd->add_option( "-o,--output", min_a.output, "Write the cover here instead of standard output" );
  min_cmd->add_option( "--budget", min_a.budget, "Neighbor subsets tried per size" )->check( CLI::PositiveNumber );
  min_cmd->add_option( "--seed", min_a.seed, "Seed for --shuffle and sampled verification" );
  min_cmd->add_flag( "--shuffle", min_a.shuffle, "Randomize neighbor order" );
  min_cmd->add_flag( "--verify,!--no-verify", min_a.verify, "Check the cover against the input" );
  min_cmd->add_flag( "--oracle", min_a.oracle, "Also report the exact minimum cover size" );

  verify_args ver_a;
  auto* ver_cmd = app.add_subcommand( "verify", "Check a cover against a function" );
  add_input_options( ver_cmd, ver_a.input );
  ver_cmd->add_option( "--cover", ver_a.cover_text, "Cover as SOP text, e.g. \"A'C' + A'BD\"" );
  ver_cmd->add_option( "--cover-file", ver_a.cover_file, "Cover as SOP text or single-output PLA" );
  ver_cmd->add_option( "--seed", ver_a.seed, "Seed for sampled checking above 20 variables" );

  generate_args gen_a;
  auto* gen_cmd = app.add_subcommand( "generate", "Write a random instance" );
  gen_cmd->add_option( "--dims", gen_a.dims, "Number of variables" )->required();
  gen_cmd->add_option( "--density", gen_a.density, "Fraction of ON points" )->required();
  gen_cmd->add_option( "--seed", gen_a.seed, "Generator seed" );
  gen_cmd->add_option( "--mode", gen_a.mode, "Sampling mode" )->check( CLI::IsMember( { "exact", "exact-count", "bernoulli" } ) );
  gen_cmd->add_option( "--format", gen_a.format, "Output format" )->check( CLI::IsMember( { "pla", "table", "minterms" } ) );
  gen_cmd->add_option( "-o,--output", gen_a.output, "Output file" );

  oracle_args ora_a;
  auto* ora_cmd = app.add_subcommand( "oracle", "Print an exact minimum cover (at most 10 variables)" );
  add_input_options( ora_cmd, ora_a.input );
  ora_cmd->add_option( "--out", ora_a.out_format, "Output format" )->check( CLI::IsMember( { "sop", "pla" } ) );
  ora_cmd->add_option( "-o,--output", ora_a.output, "Output file" );

  bench_args ben_a;
  auto* ben_cmd = app.add_subcommand( "bench", "Timing sweep, or per-output run over a multi-output PLA" );
  ben_cmd->add_option( "input", ben_a.input, "Multi-output PLA; omit for a random sweep" );
  ben_cmd->add_option( "--dims", ben_a.dims, "Dimensions, comma separated" )->delimiter( ',' );
  ben_cmd->add_option( "--dims-range", ben_a.dims_range, "Inclusive dimension range <first>:<last>" );
  ben_cmd->add_option( "--densities", ben_a.densities, "Densities, comma separated" )->delimiter( ',' );
  ben_cmd->add_option( "--repeats", ben_a.repeats, "Instances per cell" )->check( CLI::PositiveNumber );
  ben_cmd->add_option( "--seed", ben_a.seed, "Base seed" );
  ben_cmd->add_option( "--mode", ben_a.mode, "Sampling mode" )->check( CLI::IsMember( { "exact", "exact-count", "bernoulli" } ) );
  ben_cmd->add_option( "--budget", ben_a.budget, "Neighbor subsets tried per size" )->check( CLI::PositiveNumber );
  ben_cmd->add_flag( "--verify,!--no-verify", ben_a.verify, "Verify every cover" );
  ben_cmd->add_option( "--csv", ben_a.csv, "CSV output file" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return exit_ok;
  }
  catch ( CLI::CallForAllHelp const& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return exit_ok;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try
  {
    if ( *min_cmd )
      return run_minimize( min_a, in, out, err );
    if ( *ver_cmd )
      return run_verify( ver_a, in, out );
    if ( *gen_cmd )
      return run_generate( gen_a, out );
    if ( *ora_cmd )
      return run_oracle( ora_a, in, out );
    if ( *ben_cmd )
      return run_bench( ben_a, in, out, err );
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace cffmin::cli
