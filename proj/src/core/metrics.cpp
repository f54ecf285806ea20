#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace slnr {

namespace {

double norm_sq(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& e : v) s += std::norm(e);
  return s;
}

}  // namespace

double evaluate_user_slnr(const ComplexMatrix& h_k, const ComplexMatrix& leakage,
                          const ComplexMatrix& v_k, int m_k, double noise_var) {
  const double num = (h_k * v_k).frobenius_norm_sq();
  const double den = m_k * noise_var * v_k.frobenius_norm_sq() +
                     (leakage.rows() > 0 ? (leakage * v_k).frobenius_norm_sq() : 0.0);
  return num / den;
}

double evaluate_receiver_aware_user_slnr(const ChannelSet& channels,
                                         const ReceiverSet& receivers,
                                         const ComplexMatrix& v_k,
                                         const SystemConfig& config, int k) {
  const double inv_l = 1.0 / config.layers[static_cast<std::size_t>(k)];
  const double num =
      inv_l * (receivers.u(k) * channels.h(k) * v_k).frobenius_norm_sq();
  double den = config.rx_antennas[static_cast<std::size_t>(k)] * config.noise_var_of(k);
  for (int i = 0; i < config.users; ++i) {
    if (i == k) continue;
    den += inv_l * (receivers.u(i) * channels.h(i) * v_k).frobenius_norm_sq();
  }
  return num / den;
}

double evaluate_layer_slnr(const ChannelSet& channels, const ReceiverSet& receivers,
                           const std::vector<cplx>& v_kl, const SystemConfig& config,
                           int k, int l) {
  const std::vector<cplx> hv = matvec(channels.h(k), v_kl);
  const std::vector<cplx> uhv = matvec(receivers.u(k), hv);

  const double num = std::norm(uhv[static_cast<std::size_t>(l)]);
  double den = config.rx_antennas[static_cast<std::size_t>(k)] * config.noise_var_of(k);
  for (std::size_t d = 0; d < uhv.size(); ++d)
    if (d != static_cast<std::size_t>(l)) den += std::norm(uhv[d]);
  for (int i = 0; i < config.users; ++i) {
    if (i == k) continue;
    den += norm_sq(matvec(receivers.u(i), matvec(channels.h(i), v_kl)));
  }
  return num / den;
}

double evaluate_layer_slnr_quotient(const ChannelSet& channels,
                                    const ReceiverSet& receivers,
                                    const std::vector<cplx>& v_kl,
                                    const SystemConfig& config, int k, int l) {
  const EffectiveChannels eff = build_effective_channels(channels, receivers, k, l);
  const double num = norm_sq(matvec(eff.desired, v_kl));
  const double den =
      config.rx_antennas[static_cast<std::size_t>(k)] * config.noise_var_of(k) *
          norm_sq(v_kl) +
      (eff.all_leakage.rows() > 0 ? norm_sq(matvec(eff.all_leakage, v_kl)) : 0.0);
  return num / den;
}

double effective_layer_sinr(const ChannelSet& channels, const PrecoderSet& precoders,
                            const ReceiverSet& receivers, const SystemConfig& config,
                            int k, int l) {
  const ComplexMatrix& h_k = channels.h(k);
  const ComplexMatrix& u_k = receivers.u(k);
  const std::size_t row = static_cast<std::size_t>(l);

  double desired = 0.0;
  double interference = 0.0;
  for (int i = 0; i < config.users; ++i) {
    const ComplexMatrix t_i = u_k * h_k * precoders.v(i);  // L_k x L_i
    const double inv_l = 1.0 / config.layers[static_cast<std::size_t>(i)];
    for (std::size_t d = 0; d < t_i.cols(); ++d) {
      const double p = inv_l * std::norm(t_i(row, d));
      if (i == k && d == row)
        desired = p;
      else
        interference += p;
    }
  }
  double noise = 0.0;
  for (std::size_t c = 0; c < u_k.cols(); ++c) noise += std::norm(u_k(row, c));
  noise *= config.noise_var_of(k);

  return 10.0 * std::log10(desired / (interference + noise));
}

EmpiricalCdf empirical_cdf(const std::vector<double>& samples) {
  if (samples.empty()) throw EmptySamples("empirical_cdf: no samples");
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  EmpiricalCdf cdf;
  cdf.values.reserve(sorted.size());
  cdf.probs.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;  // keep last tie
    cdf.values.push_back(sorted[i]);
    cdf.probs.push_back(static_cast<double>(i + 1) / n);
  }
  return cdf;
}

double percentile(const EmpiricalCdf& cdf, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("percentile: p must lie in (0, 1)");
  const auto it = std::lower_bound(cdf.probs.begin(), cdf.probs.end(), p);
  const std::size_t idx =
      it == cdf.probs.end() ? cdf.probs.size() - 1
                            : static_cast<std::size_t>(it - cdf.probs.begin());
  return cdf.values[idx];
}

}  // namespace slnr
