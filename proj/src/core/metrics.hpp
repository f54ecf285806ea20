#pragma once

#include <cstdint>
#include <vector>

#include "core/channel.hpp"
#include "core/complex_matrix.hpp"
#include "core/precoding.hpp"
#include "core/receivers.hpp"
#include "core/system_config.hpp"

namespace slnr {

/// One measured effective-layer-SINR record. user and layer are 1-based,
/// matching the serialized form.
struct SinrSample {
  std::uint64_t drop_id = 0;
  int user = 0;
  int layer = 0;
  Scheme scheme = Scheme::kOriginalSlnr;
  ReceiverType receiver = ReceiverType::kMatchedFilter;
  double sinr_db = 0.0;

  friend bool operator==(const SinrSample&, const SinrSample&) = default;
};

/// Sorted sample values with cumulative probabilities; ties collapse to the
/// highest probability.
struct EmpiricalCdf {
  std::vector<double> values;
  std::vector<double> probs;
};

/// Per-user SLNR, the trace-quotient form:
///   Tr(V^H H^H H V) / Tr(V^H (M sigma^2 I + Htilde^H Htilde) V).
double evaluate_user_slnr(const ComplexMatrix& h_k, const ComplexMatrix& leakage,
                          const ComplexMatrix& v_k, int m_k, double noise_var);

/// Receiver-aware per-user SLNR,
///   (1/L_k)||U_k H_k V_k||_F^2 /
///     (M_k sigma^2 + sum_{i != k} (1/L_k)||U_i H_i V_k||_F^2).
/// Diagnostic; the single-layer case coincides with the per-layer objective.
double evaluate_receiver_aware_user_slnr(const ChannelSet& channels,
                                         const ReceiverSet& receivers,
                                         const ComplexMatrix& v_k,
                                         const SystemConfig& config, int k);

/// Per-layer SLNR of direction v for layer (k, l):
///   |u_{k,l} H_k v|^2 /
///     (M_k sigma^2 + sum_{d != l} |u_{k,d} H_k v|^2 + sum_{i != k} ||U_i H_i v||_F^2).
double evaluate_layer_slnr(const ChannelSet& channels, const ReceiverSet& receivers,
                           const std::vector<cplx>& v_kl, const SystemConfig& config,
                           int k, int l);

/// Same quantity via the stacked-leakage Rayleigh quotient
///   (v^H G^H G v) / (v^H (M sigma^2 I + Gbar^H Gbar) v).
double evaluate_layer_slnr_quotient(const ChannelSet& channels,
                                    const ReceiverSet& receivers,
                                    const std::vector<cplx>& v_kl,
                                    const SystemConfig& config, int k, int l);

/// Measured post-combining SINR of layer (k, l) in dB. With T_i = U_k H_k V_i,
///   (1/L_k)|[T_k]_{l,l}|^2 over
///   (1/L_k) sum_{d != l} |[T_k]_{l,d}|^2
///     + sum_{i != k} (1/L_i) sum_d |[T_i]_{l,d}|^2
///     + sigma^2 ||u_{k,l}||^2.
/// The (1/L) weights are the symbol covariance of the transmit model; the
/// noise term is combiner-weighted, unlike the M sigma^2 of the design
/// objectives.
double effective_layer_sinr(const ChannelSet& channels, const PrecoderSet& precoders,
                            const ReceiverSet& receivers, const SystemConfig& config,
                            int k, int l);

/// Throws EmptySamples on an empty input.
EmpiricalCdf empirical_cdf(const std::vector<double>& samples);

/// Smallest value whose cumulative probability reaches p; p must lie in (0, 1).
double percentile(const EmpiricalCdf& cdf, double p);

}  // namespace slnr
