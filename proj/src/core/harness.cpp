#include "core/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "core/channel.hpp"
#include "core/errors.hpp"
#include "core/precoding.hpp"
#include "core/receivers.hpp"

namespace slnr {

namespace {

std::vector<double> flatten_objective(const PrecoderSet& precoders) {
  std::vector<double> flat;
  for (const auto& vals : precoders.objective)
    flat.insert(flat.end(), vals.begin(), vals.end());
  return flat;
}

/// Executes one scheme on an already-generated channel set. Throws
/// DegenerateChannel upward so the caller owns resampling.
void run_scheme_on_channels(const ChannelSet& channels, const SystemConfig& config,
                            bool collect_trace, DropResult& result) {
  PrecoderSet precoders = slnr_user_precoder(channels, config);
  ReceiverSet receivers = compute_receivers(channels, precoders, config);

  if (config.scheme == Scheme::kLayerSlnr) {
    for (int t = 1; t <= config.feedback_iters; ++t) {
      precoders = layer_slnr_precoder(channels, receivers, config);
      receivers = compute_receivers(channels, precoders, config);
      if (collect_trace) result.objective_trace.push_back(flatten_objective(precoders));
    }
  }

  for (int k = 0; k < config.users; ++k) {
    for (int l = 0; l < config.layers[static_cast<std::size_t>(k)]; ++l) {
      SinrSample sample;
      sample.drop_id = channels.drop_id;
      sample.user = k + 1;
      sample.layer = l + 1;
      sample.scheme = config.scheme;
      sample.receiver = config.receiver;
      sample.sinr_db = effective_layer_sinr(channels, precoders, receivers, config, k, l);
      result.samples.push_back(sample);
    }
  }
}

void sort_canonical(std::vector<SinrSample>& samples) {
  std::sort(samples.begin(), samples.end(), [](const SinrSample& a, const SinrSample& b) {
    if (a.drop_id != b.drop_id) return a.drop_id < b.drop_id;
    if (a.user != b.user) return a.user < b.user;
    if (a.layer != b.layer) return a.layer < b.layer;
    return static_cast<int>(a.scheme) < static_cast<int>(b.scheme);
  });
}

/// Runs fn(drop_index) for drop_index = 0..count-1 on options.n_threads
/// workers. fn must only touch its own slot.
template <typename Fn>
void for_each_drop(std::uint64_t count, int n_threads, Fn&& fn) {
  if (n_threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

DropResult run_drop(const SystemConfig& config, std::uint64_t drop_id,
                    const RunOptions& options) {
  DropResult result;
  result.drop_id = drop_id;
  for (std::uint64_t attempt = 0;; ++attempt) {
    try {
      const ChannelSet channels = generate_channels(config, drop_id, attempt);
      result.samples.clear();
      result.objective_trace.clear();
      run_scheme_on_channels(channels, config, options.collect_trace, result);
      result.resample_attempts = attempt;
      return result;
    } catch (const DegenerateChannel&) {
      continue;
    }
  }
}

CampaignResult run_campaign(const SystemConfig& config, const RunOptions& options) {
  std::vector<DropResult> per_drop(config.drops);
  for_each_drop(config.drops, options.n_threads, [&](std::uint64_t i) {
    per_drop[i] = run_drop(config, i + 1, RunOptions{options.collect_trace, 1});
  });

  CampaignResult out;
  out.config = config;
  out.samples.reserve(config.drops * static_cast<std::uint64_t>(config.total_layers()));
  for (const DropResult& d : per_drop) {
    out.samples.insert(out.samples.end(), d.samples.begin(), d.samples.end());
    out.resample_count += d.resample_attempts;
  }
  sort_canonical(out.samples);
  out.summaries.push_back(summarize(config, config.scheme, out.samples));
  return out;
}

PairedResult compare_schemes(const SystemConfig& config, const RunOptions& options) {
  struct PairedDrop {
    std::vector<SinrSample> samples;
    std::uint64_t resamples = 0;
  };
  std::vector<PairedDrop> per_drop(config.drops);

  SystemConfig original = config;
  original.scheme = Scheme::kOriginalSlnr;
  SystemConfig layered = config;
  layered.scheme = Scheme::kLayerSlnr;

  for_each_drop(config.drops, options.n_threads, [&](std::uint64_t i) {
    const std::uint64_t drop_id = i + 1;
    PairedDrop& slot = per_drop[i];
    // Both schemes see the same realization; if either degenerates, the
    // whole drop moves to the next substream so pairing is preserved.
    for (std::uint64_t attempt = 0;; ++attempt) {
      try {
        const ChannelSet channels = generate_channels(config, drop_id, attempt);
        DropResult scratch;
        scratch.drop_id = drop_id;
        run_scheme_on_channels(channels, original, false, scratch);
        run_scheme_on_channels(channels, layered, false, scratch);
        slot.samples = std::move(scratch.samples);
        slot.resamples = attempt;
        break;
      } catch (const DegenerateChannel&) {
        continue;
      }
    }
  });

  PairedResult out;
  out.campaign.config = config;
  out.campaign.paired = true;
  for (PairedDrop& d : per_drop) {
    out.campaign.samples.insert(out.campaign.samples.end(), d.samples.begin(),
                                d.samples.end());
    out.campaign.resample_count += d.resamples;
  }
  sort_canonical(out.campaign.samples);
  out.campaign.summaries.push_back(
      summarize(config, Scheme::kOriginalSlnr, out.campaign.samples));
  out.campaign.summaries.push_back(
      summarize(config, Scheme::kLayerSlnr, out.campaign.samples));

  // Canonical order interleaves the two schemes per (drop, user, layer).
  out.deltas.reserve(out.campaign.samples.size() / 2);
  for (std::size_t i = 0; i + 1 < out.campaign.samples.size(); i += 2) {
    const SinrSample& a = out.campaign.samples[i];      // original
    const SinrSample& b = out.campaign.samples[i + 1];  // layer
    out.deltas.push_back(
        SinrDelta{a.drop_id, a.user, a.layer, b.sinr_db - a.sinr_db});
  }
  return out;
}

CampaignSummary summarize(const SystemConfig& config, Scheme scheme,
                          const std::vector<SinrSample>& samples) {
  CampaignSummary summary;
  summary.scheme = scheme;
  summary.receiver = config.receiver;
  summary.drops = config.drops;

  std::vector<double> values;
  values.reserve(samples.size());
  for (const SinrSample& s : samples)
    if (s.scheme == scheme) values.push_back(s.sinr_db);
  summary.sample_count = values.size();
  if (values.empty()) return summary;

  summary.cdf = empirical_cdf(values);
  for (double p : kSummaryPercentiles)
    summary.percentiles_db.emplace_back(p, percentile(summary.cdf, p));
  return summary;
}

}  // namespace slnr
