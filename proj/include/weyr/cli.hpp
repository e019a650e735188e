#ifndef WEYR_CLI_HPP
#define WEYR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace weyr::cli {

/// Dispatches one invocation. Exit codes: 0 success (for certify: the
/// template is miniversal), 1 certify-negative or reduce non-convergence,
/// 2 parse or validation errors.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace weyr::cli

#endif
