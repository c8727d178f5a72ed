#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dehn::cli {

struct CliConfig {
  int precision_bits = 256;
  int truncation_order = 9;
  double tol = 1e-20;
  int threads = 1;
};

// Exit codes: 0 success, 1 domain failure, 2 usage or file error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dehn::cli
