#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstcd::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kData = 3,
    kInternal = 4,
};

// Parses "2..30", "3,4,6" or "5" into gamma values.
std::vector<std::size_t> parse_gamma_list(const std::string& text);

// Full command-line entry point; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstcd::cli
