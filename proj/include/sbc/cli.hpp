#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbc::cli {

// Entry point shared by the binary and the golden-output tests.
// Returns 0 on success, 1 on verification mismatch, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sbc::cli
