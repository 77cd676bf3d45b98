#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multlab::cli {

/// Runs the batch driver in-process. Returns 0 on success, 1 on usage
/// errors, 2 on assertion failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multlab::cli
