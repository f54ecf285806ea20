#include "core/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace slnr {

namespace {

constexpr double kHermitianRelTol = 1e-12;
constexpr double kJacobiRelTol = 1e-13;
constexpr int kMaxJacobiSweeps = 64;

double off_diagonal_norm_sq(const ComplexMatrix& w) {
  double s = 0.0;
  const std::size_t n = w.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(w(i, j));
  return s;
}

}  // namespace

namespace detail {

void require_hermitian(const ComplexMatrix& c, double rel_tol, const char* who) {
  if (!c.is_square())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  double dev_sq = 0.0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = i; j < c.cols(); ++j)
      dev_sq += (i == j ? 1.0 : 2.0) * std::norm(c(i, j) - std::conj(c(j, i)));
  const double bound = rel_tol * std::max(1.0, c.frobenius_norm());
  if (std::sqrt(dev_sq) > bound)
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
}

bool lex_less(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  // Entrywise (re, im) comparison; leading near-zero entries compare equal,
  // so the first nonzero entries decide.
  constexpr double kEntryTol = 1e-12;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double dre = a[i].real() - b[i].real();
    if (std::abs(dre) > kEntryTol) return dre < 0.0;
    const double dim = a[i].imag() - b[i].imag();
    if (std::abs(dim) > kEntryTol) return dim < 0.0;
  }
  return a.size() < b.size();
}

void sort_pairs(std::vector<EigenPair>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& x, const EigenPair& y) { return x.value > y.value; });
  const auto tied = [](double x, double y) {
    return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x));
  };
  std::size_t lo = 0;
  while (lo < pairs.size()) {
    std::size_t hi = lo + 1;
    while (hi < pairs.size() && tied(pairs[lo].value, pairs[hi].value)) ++hi;
    if (hi - lo > 1) {
      std::sort(pairs.begin() + static_cast<std::ptrdiff_t>(lo),
                pairs.begin() + static_cast<std::ptrdiff_t>(hi),
                [](const EigenPair& x, const EigenPair& y) {
                  return lex_less(x.vector, y.vector);
                });
    }
    lo = hi;
  }
}

}  // namespace detail

void phase_normalize(std::vector<cplx>& v) {
  std::size_t imax = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double m = std::norm(v[i]);
    if (m > best) {
      best = m;
      imax = i;
    }
  }
  if (best == 0.0) return;
  const double mag = std::abs(v[imax]);
  const cplx rot = std::conj(v[imax]) / mag;
  for (cplx& e : v) e *= rot;
  v[imax] = cplx(std::abs(v[imax]), 0.0);
}

ComplexMatrix cholesky(const ComplexMatrix& b) {
  detail::require_hermitian(b, kHermitianRelTol, "cholesky");
  const std::size_t n = b.rows();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = b(j, j).real();
    for (std::size_t m = 0; m < j; ++m) diag -= std::norm(l(j, m));
    if (!(diag > 0.0) || !std::isfinite(diag))
      throw NotPositiveDefinite("cholesky: pivot <= 0 at index " + std::to_string(j));
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = b(i, j);
      for (std::size_t m = 0; m < j; ++m) s -= l(i, m) * std::conj(l(j, m));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

std::vector<cplx> forward_substitute(const ComplexMatrix& l, const std::vector<cplx>& b) {
  const std::size_t n = l.rows();
  std::vector<cplx> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * y[j];
    y[i] = s / l(i, i);
  }
  return y;
}

std::vector<cplx> adjoint_substitute(const ComplexMatrix& l, const std::vector<cplx>& y) {
  const std::size_t n = l.rows();
  std::vector<cplx> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    cplx s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= std::conj(l(j, ii)) * x[j];
    x[ii] = s / std::conj(l(ii, ii));
  }
  return x;
}

ComplexMatrix cholesky_solve(const ComplexMatrix& l, const ComplexMatrix& b) {
  ComplexMatrix x(b.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c)
    x.set_col(c, adjoint_substitute(l, forward_substitute(l, b.col(c))));
  return x;
}

std::vector<EigenPair> hermitian_eig(const ComplexMatrix& c) {
  detail::require_hermitian(c, kHermitianRelTol, "hermitian_eig");
  const std::size_t n = c.rows();
  ComplexMatrix w = c;
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double tol_sq = kJacobiRelTol * kJacobiRelTol * w.frobenius_norm_sq();
  bool converged = off_diagonal_norm_sq(w) <= tol_sq;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx beta = w(p, q);
        const double abeta = std::abs(beta);
        if (abeta == 0.0) continue;
        // Unitary rotation in the (p, q) plane annihilating w(p, q):
        // a diagonal phase absorbs arg(beta), then a real Jacobi rotation.
        const cplx phase = beta / abeta;
        const double alpha = w(p, p).real();
        const double gamma = w(q, q).real();
        const double tau = (gamma - alpha) / (2.0 * abeta);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        const cplx jpq = sn;                       // J(p,q)
        const cplx jqp = -sn * std::conj(phase);   // J(q,p)
        const cplx jqq = cs * std::conj(phase);    // J(q,q); J(p,p) = cs

        for (std::size_t i = 0; i < n; ++i) {  // W <- W J, V <- V J
          const cplx wip = w(i, p), wiq = w(i, q);
          w(i, p) = cs * wip + jqp * wiq;
          w(i, q) = jpq * wip + jqq * wiq;
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = cs * vip + jqp * viq;
          v(i, q) = jpq * vip + jqq * viq;
        }
        for (std::size_t j = 0; j < n; ++j) {  // W <- J^H W
          const cplx wpj = w(p, j), wqj = w(q, j);
          w(p, j) = cs * wpj + std::conj(jqp) * wqj;
          w(q, j) = std::conj(jpq) * wpj + std::conj(jqq) * wqj;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        w(p, p) = cplx(w(p, p).real(), 0.0);
        w(q, q) = cplx(w(q, q).real(), 0.0);
      }
    }
    converged = off_diagonal_norm_sq(w) <= tol_sq;
  }
  if (!converged)
    throw ConvergenceFailure("hermitian_eig: Jacobi sweeps exhausted at n = " +
                             std::to_string(n));

  std::vector<EigenPair> pairs(n);
  for (std::size_t i = 0; i < n; ++i) {
    pairs[i].value = w(i, i).real();
    pairs[i].vector = v.col(i);
    double nrm = vector_norm(pairs[i].vector);
    if (nrm > 0.0)
      for (cplx& e : pairs[i].vector) e /= nrm;
    phase_normalize(pairs[i].vector);
  }
  detail::sort_pairs(pairs);
  return pairs;
}

std::vector<EigenPair> generalized_eig_top(const ComplexMatrix& a, const ComplexMatrix& b,
                                           std::size_t k) {
  detail::require_hermitian(a, kHermitianRelTol, "generalized_eig_top");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("generalized_eig_top: A and B sizes differ");
  const std::size_t n = a.rows();
  if (k < 1 || k > n)
    throw std::invalid_argument("generalized_eig_top: k out of range");

  const ComplexMatrix l = cholesky(b);

  // W = L^{ -1 } A L^{ -H }, Hermitian; symmetrize away the roundoff drift.
  ComplexMatrix x(n, n);
  for (std::size_t c = 0; c < n; ++c) x.set_col(c, forward_substitute(l, a.col(c)));
  ComplexMatrix xh = x.adjoint();
  ComplexMatrix w(n, n);
  for (std::size_t c = 0; c < n; ++c) w.set_col(c, forward_substitute(l, xh.col(c)));
  w = w.adjoint();
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = cplx(w(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx m = 0.5 * (w(i, j) + std::conj(w(j, i)));
      w(i, j) = m;
      w(j, i) = std::conj(m);
    }
  }

  std::vector<EigenPair> pairs = hermitian_eig(w);
  for (EigenPair& p : pairs) {
    p.vector = adjoint_substitute(l, p.vector);
    const double nrm = vector_norm(p.vector);
    if (nrm > 0.0)
      for (cplx& e : p.vector) e /= nrm;
    phase_normalize(p.vector);
  }
  detail::sort_pairs(pairs);
  pairs.resize(k);
  return pairs;
}

}  // namespace slnr
