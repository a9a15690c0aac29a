#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfrob {

// Exit status: 0 all checks pass, 1 a check failed, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfrob
