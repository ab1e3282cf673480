#ifndef LPCOH_TOOLS_DISPATCH_HPP
#define LPCOH_TOOLS_DISPATCH_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lpcoh::cli {

/// Runs one CLI invocation. Returns the process exit code: 0 on success,
/// 1 on a domain error, 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpcoh::cli

#endif
