/*!
  \file pla.hpp
  \brief Reading and writing functions and covers

  Three input formats are understood:

  - Espresso-style PLA: `.i N`, `.o M`, optional `.ilb`, `.ob`, `.p`,
    `.type`, rows of `{0,1,-}` input and output characters, optional `.e`,
    and `#` comments.  Unknown directives are kept as annotations.
  - Truth table: one `<n-bit input> <bit>` line per row.
  - Minterm list: a header `n=<dims>` followed by decimal ON indices.

  An output character `-` is read as OFF; the minimizer has no notion of
  external don't-cares.
*/

#pragma once

#include <cffmin/model.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cffmin
{

class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::string const& message )
      : std::runtime_error( "line " + std::to_string( line ) + ": " + message ), line_( line )
  {
  }

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct pla_row
{
  std::string inputs;
  std::string outputs;

  friend bool operator==( pla_row const&, pla_row const& ) = default;
};

struct pla_document
{
  uint32_t num_inputs{ 0 };
  uint32_t num_outputs{ 0 };
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::optional<std::string> type;
  std::vector<std::string> annotations; /* unknown directives, verbatim */
  std::vector<pla_row> rows;

  friend bool operator==( pla_document const&, pla_document const& ) = default;
};

pla_document parse_pla( std::string_view text );
std::string write_pla( pla_document const& doc );

/*! \brief ON-set of output `output_index`: union of the expanded input cubes whose output is '1'. */
truth_function extract_function( pla_document const& doc, uint32_t output_index );

/*! \brief Input cubes of the rows whose output `output_index` is '1'. */
cover extract_cover( pla_document const& doc, uint32_t output_index );

/*! \brief Sum of fixed input positions over all rows asserting at least one output. */
uint64_t pla_literal_count( pla_document const& doc );

/*! \brief Single-output document listing one row per ON minterm. */
pla_document function_to_pla( truth_function const& f );

/*! \brief One row per cube with '-' on free positions, e.g. "0-0- 1". */
std::string cover_pla_row( cube const& q );
std::string write_cover_pla( cover const& cv );

/*! \brief Cube expressions joined by " + "; the empty cover renders as "0". */
std::string write_cover_sop( cover const& cv, std::span<std::string const> names );
std::string write_cover_sop( cover const& cv );

/*! \brief Parses `A'C' + A'BD`-style text; whitespace is ignored, "0" is the empty cover and "1" the universe. */
cover parse_sop( std::string_view text, uint32_t n, std::span<std::string const> names );
cover parse_sop( std::string_view text, uint32_t n );

truth_function parse_truth_table( std::string_view text );
std::string write_truth_table( truth_function const& f );

truth_function parse_minterms( std::string_view text );
std::string write_minterms( truth_function const& f );

} // namespace cffmin
