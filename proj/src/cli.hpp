#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aperiodic::cli {

// exit status: 0 success, 1 usage or input error, 2 empty result or failed verification
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aperiodic::cli
