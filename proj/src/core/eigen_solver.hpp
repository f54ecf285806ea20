#pragma once

#include <cstddef>
#include <vector>

#include "core/complex_matrix.hpp"

namespace slnr {

/// One (eigenvalue, eigenvector) pair. Vectors are unit Euclidean norm and
/// phase-normalized: the largest-magnitude entry is real positive.
struct EigenPair {
  double value = 0.0;
  std::vector<cplx> vector;
};

/// Lower-triangular L with L L^H = B and a real positive diagonal.
/// B must be Hermitian (checked to 1e-12 relative); a nonpositive pivot
/// throws NotPositiveDefinite.
ComplexMatrix cholesky(const ComplexMatrix& b);

/// Solve L y = b, L lower-triangular.
std::vector<cplx> forward_substitute(const ComplexMatrix& l, const std::vector<cplx>& b);

/// Solve L^H x = y.
std::vector<cplx> adjoint_substitute(const ComplexMatrix& l, const std::vector<cplx>& y);

/// Solve (L L^H) X = B column by column with the factor from cholesky().
ComplexMatrix cholesky_solve(const ComplexMatrix& l, const ComplexMatrix& b);

/// Full eigensystem of a Hermitian matrix via cyclic Jacobi rotations.
/// Values are real and sorted descending; vectors are mutually orthonormal.
/// Equal values (within 1e-12 relative) are ordered by lexicographic
/// comparison of the phase-normalized vectors.
std::vector<EigenPair> hermitian_eig(const ComplexMatrix& c);

/// Top k pairs of A v = lambda B v for Hermitian A and Hermitian
/// positive-definite B, via Cholesky reduction to a standard Hermitian
/// problem. Vectors are unit norm in the Euclidean (not B-weighted) sense.
std::vector<EigenPair> generalized_eig_top(const ComplexMatrix& a, const ComplexMatrix& b,
                                           std::size_t k);

/// Rotate v so its largest-magnitude entry is real positive.
void phase_normalize(std::vector<cplx>& v);

namespace detail {
/// Throws std::invalid_argument unless ||C - C^H||_F <= tol * max(1, ||C||_F).
void require_hermitian(const ComplexMatrix& c, double rel_tol, const char* who);
/// Ordering used for equal-eigenvalue tie-breaks.
bool lex_less(const std::vector<cplx>& a, const std::vector<cplx>& b);
/// Descending by value, lexicographic within tie groups.
void sort_pairs(std::vector<EigenPair>& pairs);
}  // namespace detail

}  // namespace slnr
