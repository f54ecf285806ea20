/* Command-line front end. Talks to the simulation core exclusively through
 * the public C API. */
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "slnrsim/slnrsim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

int report_failure(slnrsim_status status) {
  const char* category = "runtime";
  int exit_code = kExitRuntimeError;
  switch (status) {
    case SLNRSIM_ERR_PARSE:
      category = "config-parse";
      exit_code = kExitConfigError;
      break;
    case SLNRSIM_ERR_VALIDATION:
      category = "config-invalid";
      exit_code = kExitConfigError;
      break;
    case SLNRSIM_ERR_ARGUMENT:
      category = "argument";
      exit_code = kExitConfigError;
      break;
    case SLNRSIM_ERR_IO:
      category = "io";
      exit_code = kExitRuntimeError;
      break;
    default:
      break;
  }
  std::fprintf(stderr, "error: %s: %s\n", category, slnrsim_last_error());
  return exit_code;
}

std::string stem_of(const std::string& path) {
  const std::size_t dot = path.find_last_of('.');
  const std::size_t sep = path.find_last_of('/');
  if (dot == std::string::npos || (sep != std::string::npos && dot < sep)) return path;
  return path.substr(0, dot);
}

using ConfigHandle = std::unique_ptr<slnrsim_config, decltype(&slnrsim_config_free)>;
using ResultHandle = std::unique_ptr<slnrsim_result, decltype(&slnrsim_result_free)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-user multi-layer MIMO leakage-based precoding simulator"};

  std::string config_path;
  std::string scheme;
  std::string receiver;
  std::string out_path;
  std::uint64_t drops = 0;
  bool have_seed = false;
  std::uint64_t seed = 0;
  int iters = -1;
  int threads = 1;
  bool compare = false;
  bool emit_cdf = false;
  bool emit_plot_script = false;
  bool quiet = false;

  app.add_option("--config", config_path, "JSON config document")->required();
  app.add_option("--scheme", scheme, "override: original_slnr | layer_slnr");
  app.add_option("--receiver", receiver, "override: matched_filter | mmse");
  app.add_option("--drops", drops, "override: Monte Carlo drop count");
  app.add_option("--seed", seed, "override: campaign seed")
      ->each([&](const std::string&) { have_seed = true; });
  app.add_option("--iters", iters, "override: feedback iterations");
  app.add_option("--out", out_path, "override: sample CSV path");
  app.add_flag("--compare", compare, "run both schemes over paired channels");
  app.add_option("--threads", threads, "worker threads (results are unchanged)");
  app.add_flag("--emit-cdf", emit_cdf, "also write <out>_cdf.csv");
  app.add_flag("--plot-script", emit_plot_script, "also write <out>_plot.py");
  app.add_flag("--quiet", quiet, "suppress the summary table");

  CLI11_PARSE(app, argc, argv);

  slnrsim_config* raw_config = nullptr;
  slnrsim_status status = slnrsim_config_from_file(config_path.c_str(), &raw_config);
  if (status != SLNRSIM_OK) return report_failure(status);
  ConfigHandle config(raw_config, slnrsim_config_free);

  for (size_t i = 0; i < slnrsim_config_warning_count(config.get()); ++i)
    std::fprintf(stderr, "warning: %s\n", slnrsim_config_warning(config.get(), i));

  if (!scheme.empty() &&
      (status = slnrsim_config_set_scheme(config.get(), scheme.c_str())) != SLNRSIM_OK)
    return report_failure(status);
  if (!receiver.empty() &&
      (status = slnrsim_config_set_receiver(config.get(), receiver.c_str())) != SLNRSIM_OK)
    return report_failure(status);
  if (drops > 0 &&
      (status = slnrsim_config_set_drops(config.get(), drops)) != SLNRSIM_OK)
    return report_failure(status);
  if (have_seed && (status = slnrsim_config_set_seed(config.get(), seed)) != SLNRSIM_OK)
    return report_failure(status);
  if (iters >= 0 &&
      (status = slnrsim_config_set_feedback_iters(config.get(), iters)) != SLNRSIM_OK)
    return report_failure(status);
  if (!out_path.empty() &&
      (status = slnrsim_config_set_output_path(config.get(), out_path.c_str())) !=
          SLNRSIM_OK)
    return report_failure(status);

  slnrsim_result* raw_result = nullptr;
  status = compare ? slnrsim_campaign_run_paired(config.get(), threads, &raw_result)
                   : slnrsim_campaign_run(config.get(), threads, &raw_result);
  if (status != SLNRSIM_OK) return report_failure(status);
  ResultHandle result(raw_result, slnrsim_result_free);

  const std::string csv_path = slnrsim_config_output_path(config.get());
  if ((status = slnrsim_result_write_csv(result.get(), csv_path.c_str())) != SLNRSIM_OK)
    return report_failure(status);

  emit_cdf = emit_cdf || slnrsim_config_emit_cdf(config.get()) != 0;
  emit_plot_script =
      emit_plot_script || slnrsim_config_emit_plot_script(config.get()) != 0;
  if (emit_cdf) {
    const std::string cdf_path = stem_of(csv_path) + "_cdf.csv";
    if ((status = slnrsim_result_write_cdf_csv(result.get(), cdf_path.c_str())) !=
        SLNRSIM_OK)
      return report_failure(status);
    if (!quiet) std::printf("wrote %s\n", cdf_path.c_str());
  }
  if (emit_plot_script) {
    const std::string script_path = stem_of(csv_path) + "_plot.py";
    if ((status = slnrsim_write_plot_script(csv_path.c_str(), script_path.c_str())) !=
        SLNRSIM_OK)
      return report_failure(status);
    if (!quiet) std::printf("wrote %s\n", script_path.c_str());
  }

  if (!quiet) {
    std::printf("wrote %s (%zu samples)\n", csv_path.c_str(),
                slnrsim_result_sample_count(result.get()));
    std::fputs(slnrsim_result_summary(result.get()), stdout);
  }
  return kExitOk;
}
