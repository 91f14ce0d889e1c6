#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace upq {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 domain error, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upq
