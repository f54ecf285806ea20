#pragma once

// Shared helpers for the unit and acceptance suites. Test-side randomness
// deliberately uses std::mt19937_64, independent of the library's own
// stream generator.

#include <complex>
#include <random>
#include <vector>

#include "core/channel.hpp"
#include "core/complex_matrix.hpp"
#include "core/precoding.hpp"
#include "core/receivers.hpp"
#include "core/system_config.hpp"

namespace slnr_test {

using slnr::ComplexMatrix;
using slnr::cplx;

inline ComplexMatrix random_matrix(std::mt19937_64& gen, std::size_t rows,
                                   std::size_t cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = cplx(dist(gen), dist(gen));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& gen, std::size_t n) {
  ComplexMatrix x = random_matrix(gen, n, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
  return h;
}

/// X X^H + shift I, Hermitian positive definite for shift > 0.
inline ComplexMatrix random_hpd(std::mt19937_64& gen, std::size_t n, double shift = 1.0) {
  ComplexMatrix x = random_matrix(gen, n, n);
  ComplexMatrix b = slnr::gram(x.adjoint());
  for (std::size_t i = 0; i < n; ++i) b(i, i) += shift;
  return b;
}

/// Y^H Y with Y rows x n; rank <= rows, always PSD.
inline ComplexMatrix random_psd(std::mt19937_64& gen, std::size_t n, std::size_t rank) {
  return slnr::gram(random_matrix(gen, rank, n));
}

inline std::vector<cplx> random_unit_vector(std::mt19937_64& gen, std::size_t n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<cplx> v(n);
  double nrm_sq = 0.0;
  for (auto& e : v) {
    e = cplx(dist(gen), dist(gen));
    nrm_sq += std::norm(e);
  }
  const double inv = 1.0 / std::sqrt(nrm_sq);
  for (auto& e : v) e *= inv;
  return v;
}

/// Unit columns, so Tr(V^H V) equals the column count.
inline ComplexMatrix random_unit_column_matrix(std::mt19937_64& gen, std::size_t rows,
                                               std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.set_col(c, random_unit_vector(gen, rows));
  return m;
}

/// A full random scenario instance: channels plus random unit-column
/// precoders and random combiners (not optimized ones), for identities that
/// must hold at arbitrary operating points.
struct RandomInstance {
  slnr::SystemConfig config;
  slnr::ChannelSet channels;
  slnr::PrecoderSet precoders;
  slnr::ReceiverSet receivers;
};

inline RandomInstance random_instance(std::mt19937_64& gen, int users, int rx, int layers,
                                      int n_tx, double noise_var = 1.0) {
  RandomInstance inst;
  inst.config.n_tx = n_tx;
  inst.config.users = users;
  inst.config.rx_antennas.assign(static_cast<std::size_t>(users), rx);
  inst.config.layers.assign(static_cast<std::size_t>(users), layers);
  inst.config.noise_var = noise_var;
  inst.channels.drop_id = 0;
  for (int k = 0; k < users; ++k) {
    inst.channels.per_user.push_back(
        random_matrix(gen, static_cast<std::size_t>(rx), static_cast<std::size_t>(n_tx)));
    inst.precoders.per_user.push_back(random_unit_column_matrix(
        gen, static_cast<std::size_t>(n_tx), static_cast<std::size_t>(layers)));
    inst.receivers.per_user.push_back(
        random_matrix(gen, static_cast<std::size_t>(layers), static_cast<std::size_t>(rx)));
  }
  return inst;
}

}  // namespace slnr_test
