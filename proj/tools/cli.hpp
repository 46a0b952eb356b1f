#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoOrParse = 2,
  kCorrupt = 3,
};

// Entry point for the `hgc` tool. Subcommands: compress, decompress, analyze,
// predict, gen, bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgc::cli
