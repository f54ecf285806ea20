#pragma once

#include <string>
#include <vector>

#include "core/system_config.hpp"

namespace slnr {

struct OutputOptions {
  std::string output_path = "samples.csv";
  bool emit_cdf = false;
  bool emit_plot_script = false;
};

/// A parsed and validated config document plus any non-fatal warnings.
struct RunSpec {
  SystemConfig config;
  OutputOptions output;
  std::vector<std::string> warnings;
};

/// Parse a JSON config document. Unknown keys and type mismatches throw
/// ParseError; invariant violations throw ValidationError. Omitted optional
/// keys get defaults (receiver = matched_filter, feedback_iters = 10,
/// drops = 10000).
RunSpec parse_config_text(const std::string& text);

RunSpec parse_config_file(const std::string& path);

/// Canonical JSON rendering of a run spec (round-trips through
/// parse_config_text).
std::string config_to_json(const RunSpec& spec);

}  // namespace slnr
