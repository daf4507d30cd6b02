#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atfp {

/// Exit codes: 0 yes/ok, 1 no, 2 usage or parse error, 3 precondition
/// failure, 4 internal invariant violation (including a fuzz mismatch).
int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atfp
