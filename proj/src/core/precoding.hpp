#pragma once

#include <vector>

#include "core/channel.hpp"
#include "core/complex_matrix.hpp"
#include "core/system_config.hpp"

namespace slnr {

struct ReceiverSet;

/// Per-user precoders V_k (N x L_k). Columns are unit norm, so
/// Tr(V_k^H V_k) = L_k, the transmit power constraint. objective holds the
/// solver's generalized eigenvalue for each column (the SLNR value the
/// column attains).
struct PrecoderSet {
  std::vector<ComplexMatrix> per_user;
  std::vector<std::vector<double>> objective;

  const ComplexMatrix& v(int user) const { return per_user[static_cast<std::size_t>(user)]; }
};

/// Stacked interference channel for user k: all H_i with i != k, vertically,
/// in ascending i order. K = 1 yields a 0 x N matrix.
ComplexMatrix build_user_leakage(const ChannelSet& channels, int k);

/// Receiver-projected effective channels of layer (k, l):
///   desired      u_{k,l} H_k                 (1 x N)
///   intra        rows u_{k,d} H_k, d != l    ((L_k - 1) x N)
///   inter        U_i H_i blocks, i != k      (sum_{i != k} L_i x N)
///   all_leakage  [intra; inter]
struct EffectiveChannels {
  ComplexMatrix desired;
  ComplexMatrix intra;
  ComplexMatrix inter;
  ComplexMatrix all_leakage;
};

EffectiveChannels build_effective_channels(const ChannelSet& channels,
                                           const ReceiverSet& receivers, int k, int l);

/// Per-user SLNR precoder: columns of V_k are the top-L_k generalized
/// eigenvectors of (H_k^H H_k, M_k sigma^2 I + Htilde_k^H Htilde_k),
/// descending eigenvalue order.
PrecoderSet slnr_user_precoder(const ChannelSet& channels, const SystemConfig& config);

/// Per-layer SLNR precoder: v_{k,l} is the top generalized eigenvector of
/// (G^H G, M_k sigma^2 I + Gbar^H Gbar) built from the combiner rows of the
/// previous iteration.
PrecoderSet layer_slnr_precoder(const ChannelSet& channels, const ReceiverSet& receivers,
                                const SystemConfig& config);

}  // namespace slnr
