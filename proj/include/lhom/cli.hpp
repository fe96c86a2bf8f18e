// Command-line surface; run_command is callable in-process for testing.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lhom {
namespace cli {

// Exit codes: 0 success, 1 input error, 2 verification mismatch.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace cli
}  // namespace lhom
