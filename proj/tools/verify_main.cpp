#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orthospec/config.hpp"
#include "orthospec/errors.hpp"
#include "orthospec/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Orthospectrum identity checks for surface group representations"};
  std::string command, config_path, out_path;
  std::optional<int> max_len, depth;
  app.add_option("command", command, "validate | orthoset | basmajian | mcshane | compare")
      ->required()
      ->check(CLI::IsMember({"validate", "orthoset", "basmajian", "mcshane", "compare"}));
  app.add_option("--config", config_path, "configuration file")->required();
  app.add_option("--max-word-length", max_len, "override run.max_word_length");
  app.add_option("--depth", depth, "override run.mcshane_depth");
  app.add_option("--out", out_path, "output file (default output.path, else stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : orthospec::kExitConfig;
  }

  std::string echo = "verify " + command + " --config " + config_path;
  if (max_len) echo += " --max-word-length " + std::to_string(*max_len);
  if (depth) echo += " --depth " + std::to_string(*depth);

  orthospec::RunConfig cfg;
  try {
    cfg = orthospec::load_config_file(config_path);
    if (max_len) {
      if (*max_len < 0) throw orthospec::ConfigError("--max-word-length must be >= 0");
      cfg.max_word_length = *max_len;
    }
    if (depth) {
      if (*depth < 0) throw orthospec::ConfigError("--depth must be >= 0");
      cfg.mcshane_depth = *depth;
    }
  } catch (const orthospec::ConfigError& e) {
    orthospec::write_failure(std::cerr, command, "config", e.what());
    return orthospec::kExitConfig;
  }

  if (out_path.empty()) out_path = cfg.output_path;
  if (out_path.empty() || out_path == "-") return orthospec::run(cfg, command, echo, std::cout, std::cerr);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    orthospec::write_failure(std::cerr, command, "config", "cannot open output file '" + out_path + "'");
    return orthospec::kExitConfig;
  }
  return orthospec::run(cfg, command, echo, out, std::cerr);
}
