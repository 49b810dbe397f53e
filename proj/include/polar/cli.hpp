#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polar {

// Exit statuses of the command-line front end.
enum ExitStatus : int {
  exit_ok = 0,
  exit_mismatch = 1,  // failed check or counterexample
  exit_input = 2,     // inadmissible parameters, malformed input, budget overrun
  exit_io = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polar
