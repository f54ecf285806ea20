#include "core/system_config.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace slnr {

const char* to_string(Scheme s) {
  return s == Scheme::kOriginalSlnr ? "original_slnr" : "layer_slnr";
}

const char* to_string(ReceiverType r) {
  return r == ReceiverType::kMatchedFilter ? "matched_filter" : "mmse";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "original_slnr") return Scheme::kOriginalSlnr;
  if (name == "layer_slnr") return Scheme::kLayerSlnr;
  throw ValidationError("scheme must be \"original_slnr\" or \"layer_slnr\", got \"" +
                        name + "\"");
}

ReceiverType receiver_from_string(const std::string& name) {
  if (name == "matched_filter") return ReceiverType::kMatchedFilter;
  if (name == "mmse") return ReceiverType::kMmse;
  throw ValidationError("receiver must be \"matched_filter\" or \"mmse\", got \"" + name +
                        "\"");
}

int SystemConfig::total_layers() const {
  return std::accumulate(layers.begin(), layers.end(), 0);
}

std::vector<std::string> validate(const SystemConfig& config) {
  if (config.n_tx < 1) throw ValidationError("n_tx must be >= 1");
  if (config.users < 1) throw ValidationError("users must be >= 1");
  if (config.rx_antennas.size() != static_cast<std::size_t>(config.users))
    throw ValidationError("rx_antennas must list one entry per user");
  if (config.layers.size() != static_cast<std::size_t>(config.users))
    throw ValidationError("layers must list one entry per user");
  for (int k = 0; k < config.users; ++k) {
    if (config.rx_antennas[k] < 1)
      throw ValidationError("rx_antennas[" + std::to_string(k) + "] must be >= 1");
    if (config.layers[k] < 1)
      throw ValidationError("layers[" + std::to_string(k) + "] must be >= 1");
    if (config.layers[k] > std::min(config.rx_antennas[k], config.n_tx))
      throw ValidationError("layers[" + std::to_string(k) +
                            "] exceeds min(rx_antennas[k], n_tx)");
  }
  if (!(config.noise_var > 0.0)) throw ValidationError("noise_var must be > 0");
  if (config.feedback_iters < 0) throw ValidationError("feedback_iters must be >= 0");
  if (config.drops < 1) throw ValidationError("drops must be >= 1");

  std::vector<std::string> warnings;
  const int total = std::accumulate(config.layers.begin(), config.layers.end(), 0);
  if (total > config.n_tx)
    warnings.push_back("total layer count " + std::to_string(total) +
                       " exceeds n_tx = " + std::to_string(config.n_tx) +
                       "; the spatial channel cannot separate this many streams");
  return warnings;
}

}  // namespace slnr
