#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhs {

// Batch command dispatcher. `args` excludes the program name. Exit code 0:
// success / verified true; 1: a verification failed (witness in the output);
// 2: usage or parse error (diagnostic on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhs
