#pragma once

#include <vector>

#include "core/channel.hpp"
#include "core/complex_matrix.hpp"
#include "core/system_config.hpp"

namespace slnr {

struct PrecoderSet;

/// Per-user combiners U_k (L_k x M_k). Row l projects the antenna
/// observations onto the layer-l estimate.
struct ReceiverSet {
  std::vector<ComplexMatrix> per_user;

  const ComplexMatrix& u(int user) const { return per_user[static_cast<std::size_t>(user)]; }
};

/// U_k = (H_k V_k)^H / ||H_k V_k||_F. Throws DegenerateChannel when the
/// effective channel vanishes (||.||_F <= 1e-14).
ComplexMatrix matched_filter(const ComplexMatrix& h_k, const ComplexMatrix& v_k);

/// Multi-user MMSE combiner
///   U_k = (H_k V_k)^H ((H_k V_k)(H_k V_k)^H + R_k)^{-1},
///   R_k = sigma^2 I + sum_{i != k} (H_i V_i)(H_i V_i)^H.
/// The interference covariance stacks the other users' own effective
/// channels, so it is defined only when every M_i equals M_k; unequal
/// counts throw std::invalid_argument. The inversion is a Cholesky solve.
ComplexMatrix mmse_receiver(const ComplexMatrix& h_k, const ComplexMatrix& v_k,
                            const std::vector<std::pair<const ComplexMatrix*,
                                                        const ComplexMatrix*>>& others,
                            double noise_var);

/// Apply the configured combiner to every user.
ReceiverSet compute_receivers(const ChannelSet& channels, const PrecoderSet& precoders,
                              const SystemConfig& config);

}  // namespace slnr
