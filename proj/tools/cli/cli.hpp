#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace guideme::cli {

/// Runs one `guideme` invocation. `args` excludes the program name.
/// Data goes to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 on success, 1 when the operation fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace guideme::cli
