#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spintomo/half_int.hpp"

namespace spintomo {

using Complex = std::complex<double>;

/// Small dense complex square matrix, row-major.
///
/// When the matrix represents a spin-j operator, dim == 2j+1 and row/column
/// index i corresponds to projection m = j - i (index 0 is m = j).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
    if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
  const Complex& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex s, const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }
inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return subtract(a, b); }
inline ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return scale(s, a); }
inline ComplexMatrix operator*(double s, const ComplexMatrix& a) { return scale(Complex(s, 0.0), a); }

/// Eigenvalues of a Hermitian matrix in descending order, by cyclic Jacobi
/// rotations. Throws on non-Hermitian input.
std::vector<double> eigvals_hermitian(const ComplexMatrix& a, double tol = 1e-12);

/// Full Hermitian eigendecomposition. Column k of `vectors` is the
/// eigenvector of values[k]; values are descending.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};
HermitianEigen eigh(const ComplexMatrix& a, double tol = 1e-12);

/// JSON wire format: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
std::string matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const std::string& text);

struct DensityDiagnostics {
  double hermiticity_residual = 0.0;  // max |A - A^dag| entrywise
  double trace_deviation = 0.0;       // |Tr A - 1|
  double min_eigenvalue = 0.0;
};
DensityDiagnostics density_diagnostics(const ComplexMatrix& a);

/// Density operator: Hermitian (1e-12), unit trace (1e-12),
/// eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  /// Validates the invariants; throws std::invalid_argument with
  /// diagnostics on failure.
  explicit DensityMatrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return mat_.dim(); }

 private:
  ComplexMatrix mat_;
};

}  // namespace spintomo
