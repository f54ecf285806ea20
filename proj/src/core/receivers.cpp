#include "core/receivers.hpp"

#include <stdexcept>
#include <string>

#include "core/eigen_solver.hpp"
#include "core/errors.hpp"
#include "core/precoding.hpp"

namespace slnr {

ComplexMatrix matched_filter(const ComplexMatrix& h_k, const ComplexMatrix& v_k) {
  const ComplexMatrix f = h_k * v_k;
  const double nrm = f.frobenius_norm();
  if (nrm <= 1e-14)
    throw DegenerateChannel("matched_filter: ||H V||_F = " + std::to_string(nrm));
  return (cplx(1.0 / nrm) * f).adjoint();
}

ComplexMatrix mmse_receiver(const ComplexMatrix& h_k, const ComplexMatrix& v_k,
                            const std::vector<std::pair<const ComplexMatrix*,
                                                        const ComplexMatrix*>>& others,
                            double noise_var) {
  const ComplexMatrix f = h_k * v_k;  // M x L
  const std::size_t m = f.rows();

  ComplexMatrix a = gram(f.adjoint());  // F F^H
  for (const auto& [h_i, v_i] : others) {
    const ComplexMatrix f_i = (*h_i) * (*v_i);
    if (f_i.rows() != m)
      throw std::invalid_argument(
          "mmse_receiver: interference covariance (H_i V_i)(H_i V_i)^H requires every "
          "M_i to equal M_k");
    a = a + gram(f_i.adjoint());
  }
  for (std::size_t i = 0; i < m; ++i) a(i, i) += noise_var;

  const ComplexMatrix l = cholesky(a);
  const ComplexMatrix x = cholesky_solve(l, f);  // A^{-1} F
  return x.adjoint();                            // F^H A^{-1}
}

ReceiverSet compute_receivers(const ChannelSet& channels, const PrecoderSet& precoders,
                              const SystemConfig& config) {
  ReceiverSet out;
  out.per_user.reserve(static_cast<std::size_t>(config.users));
  for (int k = 0; k < config.users; ++k) {
    if (config.receiver == ReceiverType::kMatchedFilter) {
      out.per_user.push_back(matched_filter(channels.h(k), precoders.v(k)));
    } else {
      std::vector<std::pair<const ComplexMatrix*, const ComplexMatrix*>> others;
      others.reserve(static_cast<std::size_t>(config.users) - 1);
      for (int i = 0; i < config.users; ++i)
        if (i != k) others.emplace_back(&channels.h(i), &precoders.v(i));
      out.per_user.push_back(
          mmse_receiver(channels.h(k), precoders.v(k), others, config.noise_var_of(k)));
    }
  }
  return out;
}

}  // namespace slnr
