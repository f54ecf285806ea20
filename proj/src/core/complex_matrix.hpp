#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace slnr {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Shapes with zero rows or columns are
/// valid; they show up as empty leakage stacks (single-user scenarios).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  /// s * I, the scaled identity used for noise terms.
  static ComplexMatrix scaled_identity(std::size_t n, double s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  cplx* data() { return entries_.data(); }
  const cplx* data() const { return entries_.data(); }

  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  /// Sum of diagonal entries; throws std::invalid_argument if not square.
  cplx trace() const;

  double frobenius_norm_sq() const;
  double frobenius_norm() const;

  std::vector<cplx> row(std::size_t r) const;
  std::vector<cplx> col(std::size_t c) const;
  void set_col(std::size_t c, const std::vector<cplx>& v);

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

/// Vertical stack of blocks with a common column count. Blocks with zero
/// rows contribute nothing; an empty list yields a 0 x cols matrix.
ComplexMatrix vstack(const std::vector<ComplexMatrix>& blocks, std::size_t cols);

/// A^H * A without forming the adjoint. Returns cols x cols; Hermitian by
/// construction. A 0-row A yields the zero matrix.
ComplexMatrix gram(const ComplexMatrix& a);

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& v);

/// <a, b> = sum conj(a_i) b_i.
cplx inner_product(const std::vector<cplx>& a, const std::vector<cplx>& b);

double vector_norm(const std::vector<cplx>& v);

}  // namespace slnr
