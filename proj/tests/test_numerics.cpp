#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/complex_matrix.hpp"
#include "core/eigen_solver.hpp"
#include "core/errors.hpp"
#include "test_support.hpp"

using namespace slnr;
using slnr_test::random_hermitian;
using slnr_test::random_hpd;
using slnr_test::random_matrix;
using slnr_test::random_psd;
using slnr_test::random_unit_vector;

namespace {

double residual(const ComplexMatrix& a, const ComplexMatrix& b, const EigenPair& p) {
  std::vector<cplx> av = matvec(a, p.vector);
  std::vector<cplx> bv = matvec(b, p.vector);
  double s = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) s += std::norm(av[i] - p.value * bv[i]);
  return std::sqrt(s);
}

double rayleigh_quotient(const ComplexMatrix& a, const ComplexMatrix& b,
                         const std::vector<cplx>& v) {
  const cplx num = inner_product(v, matvec(a, v));
  const cplx den = inner_product(v, matvec(b, v));
  return num.real() / den.real();
}

/// Roots of the characteristic polynomial of a 3x3 Hermitian matrix,
/// independent of the Jacobi solver: trigonometric solution of the cubic.
std::vector<double> cubic_eigenvalue_oracle(const ComplexMatrix& c) {
  const double p1 = c.trace().real();
  const double p2 = (c * c).trace().real();
  double det;
  {
    const cplx a = c(0, 0), b = c(0, 1), d = c(0, 2);
    const cplx e = c(1, 0), f = c(1, 1), g = c(1, 2);
    const cplx h = c(2, 0), i = c(2, 1), j = c(2, 2);
    det = (a * (f * j - g * i) - b * (e * j - g * h) + d * (e * i - f * h)).real();
  }
  // lambda^3 - p1 lambda^2 + q lambda - det, with q from the trace identities
  const double q = 0.5 * (p1 * p1 - p2);
  // depressed form t^3 + pt + r via lambda = t + p1/3
  const double shift = p1 / 3.0;
  const double p = q - p1 * p1 / 3.0;
  const double r = -det + q * shift - 2.0 * p1 * p1 * p1 / 27.0;
  // three real roots (Hermitian): t_k = 2 sqrt(-p/3) cos(...)
  const double m = std::sqrt(std::max(0.0, -p / 3.0));
  double acos_arg = 0.0;
  if (m > 0.0) acos_arg = std::clamp(3.0 * r / (2.0 * p * m), -1.0, 1.0);
  const double phi = std::acos(acos_arg) / 3.0;
  std::vector<double> roots(3);
  for (int k = 0; k < 3; ++k)
    roots[static_cast<std::size_t>(k)] =
        shift + 2.0 * m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace

TEST_CASE("complex matrix basics") {
  ComplexMatrix m(2, 3);
  m(0, 0) = {1, 2};
  m(1, 2) = {0, -1};

  SUBCASE("adjoint is an involution") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
      ComplexMatrix x = random_matrix(gen, 4, 6);
      CHECK(x.adjoint().adjoint() == x);
    }
  }
  SUBCASE("trace requires a square matrix") {
    CHECK_THROWS_AS((void)m.trace(), std::invalid_argument);
    CHECK(ComplexMatrix::identity(3).trace().real() == doctest::Approx(3.0));
  }
  SUBCASE("frobenius norm") {
    CHECK(m.frobenius_norm() == doctest::Approx(std::sqrt(1. + 4. + 1.)));
    CHECK(ComplexMatrix(3, 3).frobenius_norm() == 0.0);
  }
  SUBCASE("zero-row matrices flow through products and stacks") {
    ComplexMatrix empty(0, 3);
    CHECK(gram(empty).frobenius_norm() == 0.0);
    CHECK(gram(empty).rows() == 3);
    ComplexMatrix stacked = vstack({empty, ComplexMatrix::identity(3)}, 3);
    CHECK(stacked.rows() == 3);
  }
  SUBCASE("gram equals explicit adjoint product") {
    std::mt19937_64 gen(8);
    ComplexMatrix x = random_matrix(gen, 5, 4);
    CHECK((gram(x) - x.adjoint() * x).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("cholesky") {
  SUBCASE("identity maps to identity") {
    ComplexMatrix l = cholesky(ComplexMatrix::identity(3));
    CHECK((l - ComplexMatrix::identity(3)).frobenius_norm() < 1e-15);
  }
  SUBCASE("diagonal case") {
    ComplexMatrix b(2, 2);
    b(0, 0) = 4.0;
    b(1, 1) = 9.0;
    ComplexMatrix l = cholesky(b);
    CHECK(l(0, 0).real() == doctest::Approx(2.0));
    CHECK(l(1, 1).real() == doctest::Approx(3.0));
    CHECK(std::abs(l(0, 1)) == 0.0);
  }
  SUBCASE("random SPD reconstructs") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
      ComplexMatrix b = random_hpd(gen, 5);
      ComplexMatrix l = cholesky(b);
      for (std::size_t i = 0; i < 5; ++i) {
        CHECK(l(i, i).imag() == 0.0);
        CHECK(l(i, i).real() > 0.0);
        for (std::size_t j = i + 1; j < 5; ++j) CHECK(std::abs(l(i, j)) == 0.0);
      }
      CHECK((l * l.adjoint() - b).frobenius_norm() <= 1e-12 * b.frobenius_norm());
    }
  }
  SUBCASE("indefinite matrix is rejected") {
    ComplexMatrix b(2, 2);
    b(0, 0) = 1.0;
    b(1, 1) = -1.0;
    CHECK_THROWS_AS((void)cholesky(b), NotPositiveDefinite);
  }
  SUBCASE("non-Hermitian input is rejected") {
    ComplexMatrix b(2, 2);
    b(0, 0) = 1.0;
    b(0, 1) = {0.0, 1.0};
    b(1, 0) = {0.0, 1.0};  // equal, not conjugate
    b(1, 1) = 1.0;
    CHECK_THROWS_AS((void)cholesky(b), std::invalid_argument);
  }
}

TEST_CASE("hermitian eigensolver") {
  SUBCASE("diagonal matrix") {
    ComplexMatrix c(2, 2);
    c(0, 0) = 3.0;
    c(1, 1) = 1.0;
    auto pairs = hermitian_eig(c);
    CHECK(pairs[0].value == doctest::Approx(3.0));
    CHECK(pairs[1].value == doctest::Approx(1.0));
    CHECK(std::abs(pairs[0].vector[0] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(pairs[1].vector[1] - cplx(1.0)) < 1e-12);
  }
  SUBCASE("symmetric exchange matrix") {
    ComplexMatrix c(2, 2);
    c(0, 1) = 1.0;
    c(1, 0) = 1.0;
    auto pairs = hermitian_eig(c);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(pairs[0].value == doctest::Approx(1.0));
    CHECK(pairs[1].value == doctest::Approx(-1.0));
    CHECK(std::abs(pairs[0].vector[0] - cplx(s)) < 1e-12);
    CHECK(std::abs(pairs[0].vector[1] - cplx(s)) < 1e-12);
    CHECK(std::abs(pairs[1].vector[0] - cplx(s)) < 1e-12);
    CHECK(std::abs(pairs[1].vector[1] - cplx(-s)) < 1e-12);
  }
  SUBCASE("random 3x3 matches the cubic-root oracle") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 100; ++trial) {
      ComplexMatrix c = random_hermitian(gen, 3);
      auto pairs = hermitian_eig(c);
      auto roots = cubic_eigenvalue_oracle(c);
      for (int i = 0; i < 3; ++i) {
        CHECK(pairs[static_cast<std::size_t>(i)].value ==
              doctest::Approx(roots[static_cast<std::size_t>(i)])
                  .epsilon(0.0)
                  .scale(0.0)
                  .epsilon(1e-8));
      }
    }
  }
  SUBCASE("orthonormal vectors, small residuals, descending values") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(gen() % 9);
      ComplexMatrix c = random_hermitian(gen, n);
      auto pairs = hermitian_eig(c);
      const ComplexMatrix eye = ComplexMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(residual(c, eye, pairs[i]) <=
              1e-10 * (c.frobenius_norm() +
                       std::abs(pairs[i].value) * eye.frobenius_norm()));
        if (i + 1 < n) CHECK(pairs[i].value >= pairs[i + 1].value);
        for (std::size_t j = i + 1; j < n; ++j)
          CHECK(std::abs(inner_product(pairs[i].vector, pairs[j].vector)) < 1e-10);
        CHECK(vector_norm(pairs[i].vector) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("generalized eigensolver") {
  SUBCASE("B = I reduces to the standard problem") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 1.0;
    auto pairs = generalized_eig_top(a, ComplexMatrix::identity(2), 2);
    CHECK(pairs[0].value == doctest::Approx(2.0));
    CHECK(pairs[1].value == doctest::Approx(1.0));
    CHECK(std::abs(pairs[0].vector[0] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(pairs[1].vector[1] - cplx(1.0)) < 1e-12);
  }
  SUBCASE("diagonal pair picks the largest ratio") {
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 1.0;
    b(0, 0) = 1.0;
    b(1, 1) = 2.0;
    auto pairs = generalized_eig_top(a, b, 1);
    CHECK(pairs.size() == 1);
    CHECK(pairs[0].value == doctest::Approx(2.0));
    CHECK(std::abs(pairs[0].vector[0] - cplx(1.0)) < 1e-12);
  }
  SUBCASE("top pair beats random search") {
    std::mt19937_64 gen(19);
    ComplexMatrix a = random_psd(gen, 6, 6);
    ComplexMatrix b = random_hpd(gen, 6);
    auto pairs = generalized_eig_top(a, b, 1);
    const double best = rayleigh_quotient(a, b, pairs[0].vector);
    for (int trial = 0; trial < 100000; ++trial) {
      const auto v = random_unit_vector(gen, 6);
      CHECK(best >= rayleigh_quotient(a, b, v) - 1e-9);
    }
  }
  SUBCASE("residual bound and unit vectors") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(gen() % 9);
      ComplexMatrix a = random_psd(gen, n, n);
      ComplexMatrix b = random_hpd(gen, n);
      auto pairs = generalized_eig_top(a, b, n);
      for (const auto& p : pairs) {
        CHECK(vector_norm(p.vector) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(residual(a, b, p) <=
              1e-10 * (a.frobenius_norm() + std::abs(p.value) * b.frobenius_norm()));
      }
    }
  }
  SUBCASE("propagates NotPositiveDefinite") {
    ComplexMatrix a = ComplexMatrix::identity(2);
    ComplexMatrix b(2, 2);
    b(0, 0) = 1.0;
    b(1, 1) = -1.0;
    CHECK_THROWS_AS((void)generalized_eig_top(a, b, 1), NotPositiveDefinite);
  }
  SUBCASE("k out of range") {
    ComplexMatrix a = ComplexMatrix::identity(2);
    CHECK_THROWS_AS((void)generalized_eig_top(a, a, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)generalized_eig_top(a, a, 3), std::invalid_argument);
  }
}

TEST_CASE("generalized eigensolver properties") {
  std::mt19937_64 gen(29);

  SUBCASE("scale invariance") {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 3 + static_cast<std::size_t>(gen() % 6);
      ComplexMatrix a = random_psd(gen, n, n);
      ComplexMatrix b = random_hpd(gen, n);
      const double alpha = 0.1 + 5.0 * std::generate_canonical<double, 53>(gen);

      auto base = generalized_eig_top(a, b, 1);
      auto scaled_a = generalized_eig_top(cplx(alpha) * a, b, 1);
      auto scaled_b = generalized_eig_top(a, cplx(alpha) * b, 1);

      CHECK(scaled_a[0].value == doctest::Approx(alpha * base[0].value).epsilon(1e-9));
      CHECK(scaled_b[0].value == doctest::Approx(base[0].value / alpha).epsilon(1e-9));
      CHECK(std::abs(inner_product(base[0].vector, scaled_a[0].vector)) ==
            doctest::Approx(1.0).epsilon(1e-9));
      CHECK(std::abs(inner_product(base[0].vector, scaled_b[0].vector)) ==
            doctest::Approx(1.0).epsilon(1e-9));
    }
  }

  SUBCASE("Cholesky reduction agrees with the direct standard problem") {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 3 + static_cast<std::size_t>(gen() % 5);
      ComplexMatrix a = random_psd(gen, n, n);
      ComplexMatrix b = random_hpd(gen, n);
      auto pairs = generalized_eig_top(a, b, n);

      const ComplexMatrix l = cholesky(b);
      // w = L^H v, renormalized, must be an eigenvector of L^{-1} A L^{-H}
      for (const auto& p : pairs) {
        std::vector<cplx> w = matvec(l.adjoint(), p.vector);
        const double nrm = vector_norm(w);
        for (auto& e : w) e /= nrm;
        // reduced-problem residual: W w = lambda w
        ComplexMatrix x(n, n);
        for (std::size_t c = 0; c < n; ++c)
          x.set_col(c, forward_substitute(l, a.col(c)));
        ComplexMatrix xh = x.adjoint();
        ComplexMatrix reduced(n, n);
        for (std::size_t c = 0; c < n; ++c)
          reduced.set_col(c, forward_substitute(l, xh.col(c)));
        reduced = reduced.adjoint();
        EigenPair mapped{p.value, w};
        CHECK(residual(reduced, ComplexMatrix::identity(n), mapped) <=
              1e-9 * (reduced.frobenius_norm() + std::abs(p.value) * std::sqrt(double(n))));
      }
    }
  }

  SUBCASE("Rayleigh quotient of the top pair equals its eigenvalue") {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 3 + static_cast<std::size_t>(gen() % 6);
      ComplexMatrix a = random_psd(gen, n, n);
      ComplexMatrix b = random_hpd(gen, n);
      auto pairs = generalized_eig_top(a, b, 1);
      CHECK(rayleigh_quotient(a, b, pairs[0].vector) ==
            doctest::Approx(pairs[0].value).epsilon(1e-10));
    }
  }
}
