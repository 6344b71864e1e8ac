#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homcode::cli {

// Runs one homcode command.  `args` excludes the program name.  Machine
// output (JSON, or DOT for export-dot) goes to `out`; one-line human
// summaries and error messages go to `err`.  Returns the process exit code:
// 0 on success, 1 on domain rejection, 2 on parse/I-O/validation failures.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace homcode::cli
