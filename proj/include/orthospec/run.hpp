#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orthospec/config.hpp"

namespace orthospec {

enum ExitCode : int {
  kExitPass = 0,
  kExitInvariant = 2,
  kExitConfig = 3,
  kExitNumerical = 4,
};

// Column table rendered as CSV (%.17g numbers) or aligned text.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out, const std::string& format) const;
};

std::string fmt_real(double v);

// Commands: validate, orthoset, basmajian, mcshane, compare.
// Tables go to out, preceded by '#' lines with the command echo and config hash.
// Failure records (one JSON object per line) and the wall-clock go to err.
int run(const RunConfig& cfg, const std::string& command, const std::string& echo, std::ostream& out,
        std::ostream& err);

// JSON failure record for errors raised outside run(), e.g. while parsing the config.
void write_failure(std::ostream& err, const std::string& command, const std::string& kind,
                   const std::string& message);

}  // namespace orthospec
