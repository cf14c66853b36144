#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace ser {

// Full command-line dispatch. Returns the process exit code:
// 0 = success/pass, 1 = violations found, 2 = usage or parameter error.
// Never throws; suitable for fuzzing with arbitrary argument vectors.
int run_cli(const std::vector<std::string>& args, std::ostream& os = std::cout,
            std::ostream& err = std::cerr);

}  // namespace ser
