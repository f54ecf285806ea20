#pragma once

#include <string>
#include <vector>

#include "core/harness.hpp"
#include "core/metrics.hpp"

namespace slnr {

/// CSV with header drop_id,user,layer,scheme,receiver,sinr_db; sinr_db at
/// 6 decimal places, LF line endings, UTF-8. Samples must already be in
/// canonical order; output is byte-stable.
void write_samples_csv(const std::vector<SinrSample>& samples, const std::string& path);

std::string samples_to_csv(const std::vector<SinrSample>& samples);

/// Inverse of the writer (used for round-trip checks and downstream tools).
std::vector<SinrSample> read_samples_csv(const std::string& path);
std::vector<SinrSample> samples_from_csv(const std::string& text);

/// Human-readable percentile table, one block per (scheme, receiver); a
/// paired result adds a gap column (layer minus original).
std::string summary_text(const CampaignResult& result);

/// CDF points as CSV: scheme,receiver,sinr_db,cum_prob.
void write_cdf_csv(const CampaignResult& result, const std::string& path);

/// Python/matplotlib script that reads the sample CSV and draws the CDF of
/// every (scheme, receiver) population on one axis (dB on x, probability
/// on y).
void write_plot_script(const std::string& csv_path, const std::string& script_path);

}  // namespace slnr
