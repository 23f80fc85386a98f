#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace linca::verify
{

struct CriterionResult
{
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suite names in criterion order.
std::vector<std::string> suite_names();

/// Runs one named suite, or every suite for "all".  Throws
/// std::invalid_argument for an unknown name.
std::vector<CriterionResult> run_suite( std::string_view name );

} // namespace linca::verify
