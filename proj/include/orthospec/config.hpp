#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthospec/rep_builder.hpp"

namespace orthospec {

struct RunConfig {
  RepresentationSpec rep;
  int max_word_length = 8;
  int mcshane_depth = 3;
  int validate_length = 4;
  std::vector<std::pair<std::string, std::string>> custom_pants;  // (beta, gamma) texts
  std::string output_path;
  std::string output_format = "csv";
  std::uint64_t hash = 0;  // of the source text
};

// Key-value document: "key = value", optional [section] headers that prefix
// keys, '#' comments, and continuation lines (no '=') appended to the previous
// value. Unknown keys are rejected.
RunConfig parse_config(std::string_view text);
RunConfig load_config_file(const std::string& path);

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace orthospec
