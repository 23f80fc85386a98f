#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linca::cli
{

enum ExitCode : int
{
  Success = 0,
  VerificationFailed = 1,
  InvalidInput = 2
};

/// Runs the command line; `args` excludes the program name.
int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace linca::cli
