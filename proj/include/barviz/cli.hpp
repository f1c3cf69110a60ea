#pragma once

#include <string>
#include <vector>

namespace barviz {

// Full command-line surface. `args` excludes the program name. Returns the
// process exit code: 0 success/YES, 1 NO-verdicts, 2 errors and usage.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace barviz
