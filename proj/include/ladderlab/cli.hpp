#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ladderlab {

// Exit status: 0 success or valid, 1 a verification found a violation, 2 usage or input error,
// 3 internal error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ladderlab
