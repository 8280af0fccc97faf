#include <catch2/catch_amalgamated.hpp>

#include <cli.hpp>

#include <cffmin/bench.hpp>
#include <cffmin/datagen.hpp>
#include <cffmin/oracle.hpp>
#include <cffmin/pla.hpp>

#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cffmin;

namespace
{

struct outcome
{
  int status;
  std::string out;
  std::string err;
};

outcome invoke( std::vector<std::string> const& args, std::string const& input = {} )
{
  std::istringstream in( input );
  std::ostringstream out;
  std::ostringstream err;
  auto const status = cli::run( args, in, out, err );
  return { status, out.str(), err.str() };
}

std::string const example_pla = ".i 4\n.o 1\n.ilb A B C D\n.ob f\n0000 1\n0001 1\n0100 1\n0101 1\n0111 1\n.e\n";

std::vector<std::string> lines_of( std::string const& text )
{
  std::vector<std::string> lines;
  std::istringstream is( text );
  for ( std::string line; std::getline( is, line ); )
  {
    lines.push_back( line );
  }
  return lines;
}

std::vector<std::string> fields_of( std::string line )
{
  if ( !line.empty() && line.back() == '\n' )
  {
    line.pop_back();
  }
  std::vector<std::string> fields;
  std::istringstream is( line );
  for ( std::string field; std::getline( is, field, ',' ); )
  {
    fields.push_back( field );
  }
  return fields;
}

/* temporary directory removed on scope exit */
struct scratch_dir
{
  scratch_dir()
      : path( std::filesystem::temp_directory_path() / ( "cffmin_cli_" + std::to_string( std::random_device{}() ) ) )
  {
    std::filesystem::create_directories( path );
  }
  ~scratch_dir() { std::filesystem::remove_all( path ); }

  std::string file( std::string const& name ) const { return ( path / name ).string(); }

  std::filesystem::path path;
};

} // namespace

TEST_CASE( "minimize prints the cover and a summary", "[cli]" )
{
  auto const r = invoke( { "minimize", "-", "--format", "pla", "--out", "sop" }, example_pla );
  REQUIRE( r.status == cli::exit_ok );
  auto const lines = lines_of( r.out );
  REQUIRE( lines.size() == 2u );

  auto const cv = parse_sop( lines[0], 4u );
  CHECK( cv.size() == 2u );
  CHECK( literal_count( cv ) == 5u );
  CHECK( test::brute_force_equal( test::example_function(), cv ) );
  CHECK( lines[1].starts_with( "implicants=2 literals=5 time=" ) );
  CHECK( lines[1].ends_with( "s verified=true" ) );
}

TEST_CASE( "minimize writes PLA and CSV", "[cli]" )
{
  auto const pla = invoke( { "minimize", "-", "--out", "pla" }, example_pla );
  REQUIRE( pla.status == cli::exit_ok );
  auto const doc = parse_pla( pla.out.substr( 0, pla.out.find( "implicants=" ) ) );
  CHECK( test::brute_force_equal( test::example_function(), extract_cover( doc, 0u ) ) );

  auto const csv = invoke( { "minimize", "-", "--out", "csv" }, example_pla );
  REQUIRE( csv.status == cli::exit_ok );
  auto const lines = lines_of( csv.out );
  REQUIRE( lines.size() == 2u );
  CHECK( lines[0] == csv_header );
  CHECK( lines[1].starts_with( "4,0.3125,0," ) );
  CHECK( lines[1].ends_with( ",2,5,true,file,exhaustive" ) );
}

TEST_CASE( "minimize with the oracle and without verification", "[cli]" )
{
  auto const r = invoke( { "minimize", "-", "--oracle", "--no-verify" }, example_pla );
  REQUIRE( r.status == cli::exit_ok );
  CHECK( r.out.find( "verified=skipped" ) != std::string::npos );
  CHECK( r.err == "oracle implicants=2 literals=5 literal_ratio=1\n" );
}

TEST_CASE( "verify reports counterexamples", "[cli]" )
{
  auto const bad = invoke( { "verify", "-", "--cover", "A'C'" }, example_pla );
  CHECK( bad.status == cli::exit_mismatch );
  CHECK( bad.out == "NOT-EQUIVALENT counterexample 0111 (function=1 cover=0)\n" );

  auto const good = invoke( { "verify", "-", "--cover", "A'BD + A'C'" }, example_pla );
  CHECK( good.status == cli::exit_ok );
  CHECK( good.out == "EQUIVALENT (exhaustive, 16 points)\n" );

  auto const over = invoke( { "verify", "-", "--cover", "A'" }, example_pla );
  CHECK( over.status == cli::exit_mismatch );
  CHECK( over.out == "NOT-EQUIVALENT counterexample 0010 (function=0 cover=1)\n" );
}

TEST_CASE( "verify reads covers from files", "[cli]" )
{
  scratch_dir dir;
  {
    std::ofstream( dir.file( "f.pla" ) ) << example_pla;
    std::ofstream( dir.file( "c.pla" ) ) << ".i 4\n.o 1\n0-0- 1\n01-1 1\n.e\n";
    std::ofstream( dir.file( "c.sop" ) ) << "A'C'\n+ A'BD\n";
  }
  CHECK( invoke( { "verify", dir.file( "f.pla" ), "--cover-file", dir.file( "c.pla" ) } ).status == cli::exit_ok );
  CHECK( invoke( { "verify", dir.file( "f.pla" ), "--cover-file", dir.file( "c.sop" ) } ).status == cli::exit_ok );
  CHECK( invoke( { "verify", dir.file( "f.pla" ) } ).status == cli::exit_usage );
  CHECK( invoke( { "verify", dir.file( "f.pla" ), "--cover", "A", "--cover-file", dir.file( "c.sop" ) } ).status == cli::exit_usage );
}

TEST_CASE( "minimize then verify round trip", "[cli]" )
{
  scratch_dir dir;
  for ( auto seed = 0u; seed < 6u; ++seed )
  {
    auto const instance = dir.file( "g" + std::to_string( seed ) + ".pla" );
    auto const cover_path = dir.file( "g" + std::to_string( seed ) + ".sop" );
    auto const gen = invoke( { "generate", "--dims", "7", "--density", "0.4", "--seed", std::to_string( seed ), "-o", instance } );
    REQUIRE( gen.status == cli::exit_ok );
    auto const min = invoke( { "minimize", instance, "-o", cover_path } );
    REQUIRE( min.status == cli::exit_ok );
    auto const ver = invoke( { "verify", instance, "--cover-file", cover_path } );
    INFO( "seed " << seed );
    CHECK( ver.status == cli::exit_ok );
    CHECK( ver.out.starts_with( "EQUIVALENT" ) );
  }
}

TEST_CASE( "generate writes every format", "[cli]" )
{
  auto const zero = invoke( { "generate", "--dims", "4", "--density", "0", "--seed", "1" } );
  REQUIRE( zero.status == cli::exit_ok );
  auto const doc = parse_pla( zero.out );
  CHECK( doc.num_inputs == 4u );
  CHECK( extract_function( doc, 0u ).num_ones() == 0u );

  auto const expected = generate( { .n = 6u, .density = 0.25, .seed = 9u } );
  auto const as_table = invoke( { "generate", "--dims", "6", "--density", "0.25", "--seed", "9", "--format", "table" } );
  auto const as_list = invoke( { "generate", "--dims", "6", "--density", "0.25", "--seed", "9", "--format", "minterms" } );
  CHECK( parse_truth_table( as_table.out ) == expected );
  CHECK( parse_minterms( as_list.out ) == expected );

  auto const bern = invoke( { "generate", "--dims", "6", "--density", "0.25", "--seed", "9", "--mode", "bernoulli", "--format", "minterms" } );
  CHECK( parse_minterms( bern.out ) == generate( { .n = 6u, .density = 0.25, .seed = 9u, .mode = gen_mode::bernoulli } ) );

  CHECK( invoke( { "generate", "--dims", "4", "--density", "1.5" } ).status == cli::exit_usage );
}

TEST_CASE( "input formats are detected", "[cli]" )
{
  auto const f = test::example_function();
  for ( auto const& text : { write_truth_table( f ), write_minterms( f ), example_pla } )
  {
    auto const r = invoke( { "minimize", "-" }, text );
    REQUIRE( r.status == cli::exit_ok );
    CHECK( test::brute_force_equal( f, parse_sop( lines_of( r.out )[0], 4u ) ) );
  }
  CHECK( invoke( { "minimize", "-", "--format", "table" }, write_minterms( f ) ).status == cli::exit_usage );
}

TEST_CASE( "oracle prints an exact cover", "[cli]" )
{
  auto const r = invoke( { "oracle", "-" }, example_pla );
  REQUIRE( r.status == cli::exit_ok );
  auto const lines = lines_of( r.out );
  REQUIRE( lines.size() == 2u );
  CHECK( literal_count( parse_sop( lines[0], 4u ) ) == 5u );
  CHECK( lines[1].starts_with( "implicants=2 literals=5 time=" ) );

  auto const big = write_minterms( generate( { .n = 11u, .density = 0.1, .seed = 1u } ) );
  auto const over = invoke( { "oracle", "-" }, big );
  CHECK( over.status == cli::exit_usage );
  CHECK( over.err.find( "oracle limit exceeded" ) != std::string::npos );
}

TEST_CASE( "bench sweeps write CSV", "[cli]" )
{
  auto const r = invoke( { "bench", "--dims", "5,6", "--densities", "0.5,0.25", "--repeats", "2", "--seed", "3" } );
  REQUIRE( r.status == cli::exit_ok );
  auto const lines = lines_of( r.out );
  REQUIRE( lines.size() == 9u );
  CHECK( lines[0] == csv_header );

  std::vector<uint32_t> const dims = { 5u, 6u };
  std::vector<double> const densities = { 0.5, 0.25 };
  auto const records = sweep( dims, densities, 2u, 3u );
  for ( auto i = 0u; i < records.size(); ++i )
  {
    std::ostringstream expected;
    write_csv_row( expected, records[i] );
    auto const want = fields_of( expected.str() );
    auto const got = fields_of( lines[i + 1u] );
    REQUIRE( got.size() == 9u );
    for ( auto k : { 0u, 1u, 2u, 4u, 5u, 6u, 7u, 8u } ) /* all but the timing */
    {
      CHECK( got[k] == want[k] );
    }
  }

  auto const range = invoke( { "bench", "--dims-range", "3:5", "--densities", "0.5", "--no-verify", "--mode", "bernoulli" } );
  REQUIRE( range.status == cli::exit_ok );
  auto const range_lines = lines_of( range.out );
  REQUIRE( range_lines.size() == 4u );
  CHECK( range_lines[1].starts_with( "3,0.5," ) );
  CHECK( range_lines[3].ends_with( ",false,bernoulli,skipped" ) );

  CHECK( invoke( { "bench", "--dims", "5" } ).status == cli::exit_usage );
  CHECK( invoke( { "bench", "--dims-range", "6:4", "--densities", "0.5" } ).status == cli::exit_usage );
}

TEST_CASE( "bench over a multi-output PLA reports consolidation", "[cli]" )
{
  auto const r = invoke( { "bench", "-" }, ".i 3\n.o 2\n0-- 10\n-11 11\n111 01\n.e\n" );
  REQUIRE( r.status == cli::exit_ok );
  auto const lines = lines_of( r.out );
  REQUIRE( lines.size() == 3u );
  CHECK( lines[1].starts_with( "3,0.625,0," ) );
  CHECK( lines[2].starts_with( "3,0.25,0," ) );
  CHECK( r.err == "outputs=2 original_literals=6 consolidated_implicants=2 consolidated_literals=3 reduction=50.0000000%\n" );
}

TEST_CASE( "usage and parse errors exit with status 2", "[cli]" )
{
  auto const parse = invoke( { "minimize", "-" }, ".i 2\n.o 1\n0x 1\n" );
  CHECK( parse.status == cli::exit_usage );
  CHECK( parse.err == "error: -:line 3: illegal character 'x' in inputs\n" );

  CHECK( invoke( {} ).status == cli::exit_usage );
  CHECK( invoke( { "frobnicate" } ).status == cli::exit_usage );
  CHECK( invoke( { "minimize" } ).status == cli::exit_usage );
  CHECK( invoke( { "minimize", "/nonexistent/file.pla" } ).status == cli::exit_usage );
  CHECK( invoke( { "minimize", "-", "--out", "json" }, example_pla ).status == cli::exit_usage );
  CHECK( invoke( { "minimize", "-", "--output-index", "1" }, example_pla ).status == cli::exit_usage );
  CHECK( invoke( { "minimize", "-", "--budget", "0" }, example_pla ).status == cli::exit_usage );

  auto const help = invoke( { "--help" } );
  CHECK( help.status == cli::exit_ok );
  CHECK( help.out.find( "minimize" ) != std::string::npos );
}
