#pragma once

#include <cstdint>
#include <vector>

#include "core/metrics.hpp"
#include "core/system_config.hpp"

namespace slnr {

/// Outcome of one drop: one SinrSample per (user, layer), plus the optional
/// per-iteration trace of the layer-SLNR eigenvalues (one flattened
/// (k, l)-major vector per iteration).
struct DropResult {
  std::uint64_t drop_id = 0;
  std::vector<SinrSample> samples;
  std::vector<std::vector<double>> objective_trace;
  std::uint64_t resample_attempts = 0;
};

struct RunOptions {
  bool collect_trace = false;
  int n_threads = 1;  // <= 1 runs inline; results are schedule-independent
};

/// Percentile table and CDF for one (scheme, receiver) sample population.
struct CampaignSummary {
  Scheme scheme = Scheme::kOriginalSlnr;
  ReceiverType receiver = ReceiverType::kMatchedFilter;
  std::uint64_t drops = 0;
  std::uint64_t sample_count = 0;
  std::vector<std::pair<double, double>> percentiles_db;  // (p, value)
  EmpiricalCdf cdf;
};

/// All samples of a campaign in canonical (drop, user, layer, scheme) order.
struct CampaignResult {
  SystemConfig config;
  std::vector<SinrSample> samples;
  std::vector<CampaignSummary> summaries;  // one per scheme present
  std::uint64_t resample_count = 0;
  bool paired = false;
};

/// Per-layer SINR difference between the two schemes on one paired drop.
struct SinrDelta {
  std::uint64_t drop_id = 0;
  int user = 0;
  int layer = 0;
  double delta_db = 0.0;  // layer_slnr minus original_slnr
};

inline constexpr double kSummaryPercentiles[] = {0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95};

/// One drop of the configured scheme: bootstrap with the per-user precoder,
/// derive the combiners, then (layer scheme only) alternate per-layer
/// precoder and combiner updates feedback_iters times, each precoder update
/// using the previous iteration's combiners. The SINR is measured at the
/// final (precoder, combiner) pair. Degenerate drops are resampled on the
/// next substream attempt.
DropResult run_drop(const SystemConfig& config, std::uint64_t drop_id,
                    const RunOptions& options = {});

/// drops independent drops, deterministic in (config, drop count) and
/// independent of the worker count.
CampaignResult run_campaign(const SystemConfig& config, const RunOptions& options = {});

/// Both schemes over identical channel realizations; samples carry the scheme
/// tag and deltas pair them per (drop, user, layer).
struct PairedResult {
  CampaignResult campaign;  // paired = true, samples for both schemes
  std::vector<SinrDelta> deltas;
};

PairedResult compare_schemes(const SystemConfig& config, const RunOptions& options = {});

CampaignSummary summarize(const SystemConfig& config, Scheme scheme,
                          const std::vector<SinrSample>& samples);

}  // namespace slnr
