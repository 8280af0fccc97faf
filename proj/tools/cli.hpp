/*!
  \file cli.hpp
  \brief Command-line front end

  Subcommands: minimize, verify, generate, oracle and bench.  Exit status is
  0 on success, 1 when a verification finds a mismatch and 2 on usage,
  input or parse errors.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cffmin::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/*! \brief Runs one command line; `args` excludes the program name.  A path of "-" reads `in` or writes `out`. */
int run( std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err );

} // namespace cffmin::cli
