#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lindef {

// Exit codes: 0 success, 2 parse error, 3 validation error, 4 failed
// property or oracle mismatch.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace lindef
