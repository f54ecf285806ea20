#include "core/channel.hpp"

#include "core/stream_rng.hpp"

namespace slnr {

ChannelSet generate_channels(const SystemConfig& config, std::uint64_t drop_id,
                             std::uint64_t attempt) {
  ChannelSet set;
  set.drop_id = drop_id;
  set.per_user.reserve(static_cast<std::size_t>(config.users));
  for (int k = 0; k < config.users; ++k) {
    StreamRng rng(config.seed, drop_id, static_cast<std::uint64_t>(k), attempt);
    ComplexMatrix h(static_cast<std::size_t>(config.rx_antennas[k]),
                    static_cast<std::size_t>(config.n_tx));
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c) h(r, c) = rng.next_complex_gaussian();
    set.per_user.push_back(std::move(h));
  }
  return set;
}

}  // namespace slnr
