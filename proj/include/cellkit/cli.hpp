#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellkit::cli {

/// Exit statuses: 0 computed with a positive verdict, 1 computed with a
/// negative verdict, 2 usage or input error, 3 internal invariant failure.
enum Exit : int { kPositive = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellkit::cli
