#pragma once

#include <cstdint>
#include <vector>

#include "core/complex_matrix.hpp"
#include "core/system_config.hpp"

namespace slnr {

/// The K per-user M_k x N channel matrices of one drop.
struct ChannelSet {
  std::uint64_t drop_id = 0;
  std::vector<ComplexMatrix> per_user;

  const ComplexMatrix& h(int user) const { return per_user[static_cast<std::size_t>(user)]; }
};

/// i.i.d. Rayleigh drop: every entry is CN(0, 1), streamed deterministically
/// from (config.seed, drop_id, user, attempt). attempt > 0 is used only when
/// a degenerate drop has to be resampled.
ChannelSet generate_channels(const SystemConfig& config, std::uint64_t drop_id,
                             std::uint64_t attempt = 0);

}  // namespace slnr
