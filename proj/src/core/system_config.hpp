#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slnr {

enum class Scheme { kOriginalSlnr, kLayerSlnr };
enum class ReceiverType { kMatchedFilter, kMmse };

const char* to_string(Scheme s);
const char* to_string(ReceiverType r);
Scheme scheme_from_string(const std::string& name);        // throws ValidationError
ReceiverType receiver_from_string(const std::string& name);  // throws ValidationError

/// Full scenario description for one campaign. The config surface exposes a
/// single shared noise variance; per-user values stay in the data model via
/// noise_var_of().
struct SystemConfig {
  int n_tx = 8;                   // N transmit antennas
  int users = 3;                  // K
  std::vector<int> rx_antennas;   // M_k
  std::vector<int> layers;        // L_k
  double noise_var = 1.0;         // sigma^2 per receive antenna
  Scheme scheme = Scheme::kLayerSlnr;
  ReceiverType receiver = ReceiverType::kMatchedFilter;
  int feedback_iters = 10;        // T
  std::uint64_t drops = 10000;
  std::uint64_t seed = 1;

  double noise_var_of(int /*user*/) const { return noise_var; }
  int total_layers() const;
};

/// Throws ValidationError naming the violated invariant; returns warnings
/// for recommended-but-not-required conditions (sum L_k <= N).
std::vector<std::string> validate(const SystemConfig& config);

}  // namespace slnr
