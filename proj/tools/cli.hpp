#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dwig::cli {

enum exit_code : int { ok = 0, rejected = 1, usage = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dwig::cli
