#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groupext {

// Dispatches a command line (without argv[0]). Exit status: 0 on success or a
// confirmed verdict, 1 when a scan finding or sweep counterexample is the
// result, 2 on usage, syntax or semantic errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groupext
