#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cayleyqc::cli {

/// Process exit codes.
enum ExitCode : int {
  exit_ok = 0,
  exit_internal = 1,
  exit_parse = 2,
  exit_validation = 3,
  exit_resource = 4,
  exit_incomplete = 5,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cayleyqc::cli
