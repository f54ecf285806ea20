/* C API surface: translates exceptions from the core into status codes and
 * keeps all C++ objects behind the opaque handles. */
#include "slnrsim/slnrsim.h"

#include <exception>
#include <string>

#include "core/config_json.hpp"
#include "core/errors.hpp"
#include "core/harness.hpp"
#include "core/report.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

slnrsim_status classify_current_exception() {
  try {
    throw;
  } catch (const slnr::ParseError& e) {
    set_error(e.what());
    return SLNRSIM_ERR_PARSE;
  } catch (const slnr::ValidationError& e) {
    set_error(e.what());
    return SLNRSIM_ERR_VALIDATION;
  } catch (const slnr::IoError& e) {
    set_error(e.what());
    return SLNRSIM_ERR_IO;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return SLNRSIM_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SLNRSIM_ERR_RUNTIME;
  } catch (...) {
    set_error("unknown failure");
    return SLNRSIM_ERR_RUNTIME;
  }
}

slnrsim_status argument_error(const char* msg) {
  set_error(msg);
  return SLNRSIM_ERR_ARGUMENT;
}

slnr::Scheme to_core(slnrsim_scheme s) {
  return s == SLNRSIM_SCHEME_ORIGINAL_SLNR ? slnr::Scheme::kOriginalSlnr
                                           : slnr::Scheme::kLayerSlnr;
}

int32_t from_core(slnr::Scheme s) {
  return s == slnr::Scheme::kOriginalSlnr ? SLNRSIM_SCHEME_ORIGINAL_SLNR
                                          : SLNRSIM_SCHEME_LAYER_SLNR;
}

int32_t from_core(slnr::ReceiverType r) {
  return r == slnr::ReceiverType::kMatchedFilter ? SLNRSIM_RECEIVER_MATCHED_FILTER
                                                 : SLNRSIM_RECEIVER_MMSE;
}

}  // namespace

struct slnrsim_config {
  slnr::RunSpec spec;
  mutable std::string json_cache;
};

struct slnrsim_result {
  slnr::CampaignResult campaign;
  std::vector<slnr::SinrDelta> deltas;
  mutable std::string summary_cache;
};

extern "C" {

const char* slnrsim_last_error(void) { return g_last_error.c_str(); }

const char* slnrsim_version(void) { return "slnrsim 1.0.0"; }

slnrsim_status slnrsim_config_from_json(const char* json_text,
                                        slnrsim_config** out_config) {
  if (!json_text || !out_config) return argument_error("null argument");
  try {
    auto* handle = new slnrsim_config{slnr::parse_config_text(json_text), {}};
    *out_config = handle;
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

slnrsim_status slnrsim_config_from_file(const char* path, slnrsim_config** out_config) {
  if (!path || !out_config) return argument_error("null argument");
  try {
    auto* handle = new slnrsim_config{slnr::parse_config_file(path), {}};
    *out_config = handle;
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

void slnrsim_config_free(slnrsim_config* config) { delete config; }

slnrsim_status slnrsim_config_set_scheme(slnrsim_config* config, const char* scheme) {
  if (!config || !scheme) return argument_error("null argument");
  try {
    config->spec.config.scheme = slnr::scheme_from_string(scheme);
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

slnrsim_status slnrsim_config_set_receiver(slnrsim_config* config, const char* receiver) {
  if (!config || !receiver) return argument_error("null argument");
  try {
    config->spec.config.receiver = slnr::receiver_from_string(receiver);
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

slnrsim_status slnrsim_config_set_drops(slnrsim_config* config, uint64_t drops) {
  if (!config) return argument_error("null config");
  if (drops < 1) {
    set_error("drops must be >= 1");
    return SLNRSIM_ERR_VALIDATION;
  }
  config->spec.config.drops = drops;
  return SLNRSIM_OK;
}

slnrsim_status slnrsim_config_set_seed(slnrsim_config* config, uint64_t seed) {
  if (!config) return argument_error("null config");
  config->spec.config.seed = seed;
  return SLNRSIM_OK;
}

slnrsim_status slnrsim_config_set_feedback_iters(slnrsim_config* config, int32_t iters) {
  if (!config) return argument_error("null config");
  if (iters < 0) {
    set_error("feedback_iters must be >= 0");
    return SLNRSIM_ERR_VALIDATION;
  }
  config->spec.config.feedback_iters = iters;
  return SLNRSIM_OK;
}

slnrsim_status slnrsim_config_set_output_path(slnrsim_config* config, const char* path) {
  if (!config || !path) return argument_error("null argument");
  config->spec.output.output_path = path;
  return SLNRSIM_OK;
}

const char* slnrsim_config_json(const slnrsim_config* config) {
  if (!config) return "";
  config->json_cache = slnr::config_to_json(config->spec);
  return config->json_cache.c_str();
}

const char* slnrsim_config_output_path(const slnrsim_config* config) {
  return config ? config->spec.output.output_path.c_str() : "";
}

int32_t slnrsim_config_emit_cdf(const slnrsim_config* config) {
  return config && config->spec.output.emit_cdf ? 1 : 0;
}

int32_t slnrsim_config_emit_plot_script(const slnrsim_config* config) {
  return config && config->spec.output.emit_plot_script ? 1 : 0;
}

size_t slnrsim_config_warning_count(const slnrsim_config* config) {
  return config ? config->spec.warnings.size() : 0;
}

const char* slnrsim_config_warning(const slnrsim_config* config, size_t index) {
  if (!config || index >= config->spec.warnings.size()) return "";
  return config->spec.warnings[index].c_str();
}

slnrsim_status slnrsim_campaign_run(const slnrsim_config* config, int32_t n_threads,
                                    slnrsim_result** out_result) {
  if (!config || !out_result) return argument_error("null argument");
  try {
    slnr::RunOptions options;
    options.n_threads = n_threads;
    auto* handle = new slnrsim_result;
    handle->campaign = slnr::run_campaign(config->spec.config, options);
    *out_result = handle;
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

slnrsim_status slnrsim_campaign_run_paired(const slnrsim_config* config, int32_t n_threads,
                                           slnrsim_result** out_result) {
  if (!config || !out_result) return argument_error("null argument");
  try {
    slnr::RunOptions options;
    options.n_threads = n_threads;
    slnr::PairedResult paired = slnr::compare_schemes(config->spec.config, options);
    auto* handle = new slnrsim_result;
    handle->campaign = std::move(paired.campaign);
    handle->deltas = std::move(paired.deltas);
    *out_result = handle;
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

void slnrsim_result_free(slnrsim_result* result) { delete result; }

size_t slnrsim_result_sample_count(const slnrsim_result* result) {
  return result ? result->campaign.samples.size() : 0;
}

slnrsim_status slnrsim_result_sample(const slnrsim_result* result, size_t index,
                                     slnrsim_sample* out_sample) {
  if (!result || !out_sample) return argument_error("null argument");
  if (index >= result->campaign.samples.size())
    return argument_error("sample index out of range");
  const slnr::SinrSample& s = result->campaign.samples[index];
  out_sample->drop_id = s.drop_id;
  out_sample->user = s.user;
  out_sample->layer = s.layer;
  out_sample->scheme = from_core(s.scheme);
  out_sample->receiver = from_core(s.receiver);
  out_sample->sinr_db = s.sinr_db;
  return SLNRSIM_OK;
}

uint64_t slnrsim_result_resample_count(const slnrsim_result* result) {
  return result ? result->campaign.resample_count : 0;
}

slnrsim_status slnrsim_result_percentile(const slnrsim_result* result, int32_t scheme,
                                         double p, double* out_db) {
  if (!result || !out_db) return argument_error("null argument");
  if (scheme != SLNRSIM_SCHEME_ORIGINAL_SLNR && scheme != SLNRSIM_SCHEME_LAYER_SLNR)
    return argument_error("unknown scheme tag");
  try {
    const slnr::Scheme want = to_core(static_cast<slnrsim_scheme>(scheme));
    for (const slnr::CampaignSummary& s : result->campaign.summaries) {
      if (s.scheme == want && s.sample_count > 0) {
        *out_db = slnr::percentile(s.cdf, p);
        return SLNRSIM_OK;
      }
    }
    set_error("result holds no samples for the requested scheme");
    return SLNRSIM_ERR_ARGUMENT;
  } catch (...) {
    return classify_current_exception();
  }
}

slnrsim_status slnrsim_result_mean_gap_db(const slnrsim_result* result, double* out_db) {
  if (!result || !out_db) return argument_error("null argument");
  if (result->deltas.empty()) return argument_error("result is not a paired comparison");
  double acc = 0.0;
  for (const slnr::SinrDelta& d : result->deltas) acc += d.delta_db;
  *out_db = acc / static_cast<double>(result->deltas.size());
  return SLNRSIM_OK;
}

const char* slnrsim_result_summary(const slnrsim_result* result) {
  if (!result) return "";
  result->summary_cache = slnr::summary_text(result->campaign);
  return result->summary_cache.c_str();
}

slnrsim_status slnrsim_result_write_csv(const slnrsim_result* result, const char* path) {
  if (!result || !path) return argument_error("null argument");
  try {
    slnr::write_samples_csv(result->campaign.samples, path);
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

slnrsim_status slnrsim_result_write_cdf_csv(const slnrsim_result* result, const char* path) {
  if (!result || !path) return argument_error("null argument");
  try {
    slnr::write_cdf_csv(result->campaign, path);
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

slnrsim_status slnrsim_write_plot_script(const char* csv_path, const char* script_path) {
  if (!csv_path || !script_path) return argument_error("null argument");
  try {
    slnr::write_plot_script(csv_path, script_path);
    return SLNRSIM_OK;
  } catch (...) {
    return classify_current_exception();
  }
}

}  // extern "C"
