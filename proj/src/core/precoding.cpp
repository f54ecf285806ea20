#include "core/precoding.hpp"

#include "core/eigen_solver.hpp"
#include "core/receivers.hpp"

namespace slnr {

ComplexMatrix build_user_leakage(const ChannelSet& channels, int k) {
  const std::size_t n = channels.per_user.empty() ? 0 : channels.per_user[0].cols();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(channels.per_user.size());
  for (int i = 0; i < static_cast<int>(channels.per_user.size()); ++i)
    if (i != k) blocks.push_back(channels.h(i));
  return vstack(blocks, n);
}

EffectiveChannels build_effective_channels(const ChannelSet& channels,
                                           const ReceiverSet& receivers, int k, int l) {
  const ComplexMatrix& h_k = channels.h(k);
  const ComplexMatrix& u_k = receivers.u(k);
  const std::size_t n = h_k.cols();
  const std::size_t layers_k = u_k.rows();

  EffectiveChannels eff;

  ComplexMatrix u_row(1, u_k.cols());
  for (std::size_t c = 0; c < u_k.cols(); ++c)
    u_row(0, c) = u_k(static_cast<std::size_t>(l), c);
  eff.desired = u_row * h_k;

  ComplexMatrix u_hat(layers_k - 1, u_k.cols());
  std::size_t at = 0;
  for (std::size_t d = 0; d < layers_k; ++d) {
    if (d == static_cast<std::size_t>(l)) continue;
    for (std::size_t c = 0; c < u_k.cols(); ++c) u_hat(at, c) = u_k(d, c);
    ++at;
  }
  eff.intra = u_hat * h_k;

  std::vector<ComplexMatrix> inter_blocks;
  inter_blocks.reserve(channels.per_user.size());
  for (int i = 0; i < static_cast<int>(channels.per_user.size()); ++i)
    if (i != k) inter_blocks.push_back(receivers.u(i) * channels.h(i));
  eff.inter = vstack(inter_blocks, n);

  eff.all_leakage = vstack({eff.intra, eff.inter}, n);
  return eff;
}

PrecoderSet slnr_user_precoder(const ChannelSet& channels, const SystemConfig& config) {
  PrecoderSet out;
  out.per_user.reserve(static_cast<std::size_t>(config.users));
  out.objective.reserve(static_cast<std::size_t>(config.users));
  const std::size_t n = static_cast<std::size_t>(config.n_tx);

  for (int k = 0; k < config.users; ++k) {
    const ComplexMatrix leakage = build_user_leakage(channels, k);
    const double noise = config.rx_antennas[static_cast<std::size_t>(k)] *
                         config.noise_var_of(k);
    const ComplexMatrix a = gram(channels.h(k));
    const ComplexMatrix b = ComplexMatrix::scaled_identity(n, noise) + gram(leakage);

    const std::size_t layers_k = static_cast<std::size_t>(config.layers[static_cast<std::size_t>(k)]);
    std::vector<EigenPair> pairs = generalized_eig_top(a, b, layers_k);

    ComplexMatrix v(n, layers_k);
    std::vector<double> vals(layers_k);
    for (std::size_t l = 0; l < layers_k; ++l) {
      v.set_col(l, pairs[l].vector);
      vals[l] = pairs[l].value;
    }
    out.per_user.push_back(std::move(v));
    out.objective.push_back(std::move(vals));
  }
  return out;
}

PrecoderSet layer_slnr_precoder(const ChannelSet& channels, const ReceiverSet& receivers,
                                const SystemConfig& config) {
  PrecoderSet out;
  out.per_user.reserve(static_cast<std::size_t>(config.users));
  out.objective.reserve(static_cast<std::size_t>(config.users));
  const std::size_t n = static_cast<std::size_t>(config.n_tx);

  for (int k = 0; k < config.users; ++k) {
    const std::size_t layers_k = static_cast<std::size_t>(config.layers[static_cast<std::size_t>(k)]);
    const double noise = config.rx_antennas[static_cast<std::size_t>(k)] *
                         config.noise_var_of(k);
    ComplexMatrix v(n, layers_k);
    std::vector<double> vals(layers_k);
    for (std::size_t l = 0; l < layers_k; ++l) {
      const EffectiveChannels eff =
          build_effective_channels(channels, receivers, k, static_cast<int>(l));
      const ComplexMatrix a = gram(eff.desired);
      const ComplexMatrix b =
          ComplexMatrix::scaled_identity(n, noise) + gram(eff.all_leakage);
      const EigenPair top = generalized_eig_top(a, b, 1)[0];
      v.set_col(l, top.vector);
      vals[l] = top.value;
    }
    out.per_user.push_back(std::move(v));
    out.objective.push_back(std::move(vals));
  }
  return out;
}

}  // namespace slnr
