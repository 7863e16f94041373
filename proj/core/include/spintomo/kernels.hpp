#pragma once

#include <complex>
#include <vector>

#include "spintomo/complex_matrix.hpp"
#include "spintomo/tomography.hpp"

namespace spintomo {

/// Quantization axis n = (cos a sin b, sin a sin b, cos b) of u^dag J_z u.
struct AxisVector {
  double x = 0, y = 0, z = 1;
};

AxisVector axis_vector(const EulerAngles& angles);
double dot(const AxisVector& a, const AxisVector& b);
AxisVector cross(const AxisVector& a, const AxisVector& b);
/// Scalar triple product a . [b x c].
double triple(const AxisVector& a, const AxisVector& b, const AxisVector& c);

/// Tomographic symbol f_A(x) = Tr(A U(x)); real for Hermitian A.
Complex symbol(const ComplexMatrix& a, const TomographyPoint& x);
/// Dual symbol f^d_B(x) = Tr(B D(x)).
Complex dual_symbol(const ComplexMatrix& b, const TomographyPoint& x, const SLBasis& basis);
Complex dual_symbol(const ComplexMatrix& b, const TomographyPoint& x);

/// Symbol samples over a full grid, ordered like Tomogram::values.
std::vector<Complex> sample_symbol(const ComplexMatrix& a, const QuadratureGrid& grid);
std::vector<Complex> sample_dual_symbol(const ComplexMatrix& b, const QuadratureGrid& grid,
                                        const SLBasis& basis);

/// Kernel of the unity operator, Tr(D(x2) U(x1)).
Complex delta_kernel_numeric(HalfInt j, const TomographyPoint& x2, const TomographyPoint& x1,
                             const SLBasis& basis);

/// Star-product kernel K(x3,x2,x1) = Tr(D(x3) D(x2) U(x1)).
Complex star_kernel_numeric(HalfInt j, const TomographyPoint& x3, const TomographyPoint& x2,
                            const TomographyPoint& x1, const SLBasis& basis);

/// Dual-symbol kernel K^d(x3,x2,x1) = Tr(U(x3) U(x2) D(x1)).
Complex dual_kernel_numeric(HalfInt j, const TomographyPoint& x3, const TomographyPoint& x2,
                            const TomographyPoint& x1, const SLBasis& basis);

/// Closed forms for spin 1/2 and spin 1, as functions of the projections and
/// quantization axes. Kept as independent code paths so agreement with the
/// trace forms cross-checks the algebra.
double delta_kernel_qubit(double m2, const AxisVector& n2, double m1, const AxisVector& n1);
double delta_kernel_qutrit(double m2, const AxisVector& n2, double m1, const AxisVector& n1);
Complex star_kernel_qubit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                          double m1, const AxisVector& n1);
Complex star_kernel_qutrit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                           double m1, const AxisVector& n1);
Complex dual_kernel_qubit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                          double m1, const AxisVector& n1);
Complex dual_kernel_qutrit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                           double m1, const AxisVector& n1);

/// Star product of two symbol sample sets through the double quadrature
///   (fA * fB)(x1) = int int fA(x3) fB(x2) K(x3,x2,x1) dx2 dx3.
/// Cost grows with the square of the grid, so grids beyond j = 1 require
/// allow_large.
Complex star_product(const QuadratureGrid& grid, const std::vector<Complex>& f_a,
                     const std::vector<Complex>& f_b, const TomographyPoint& x1,
                     bool allow_large = false);

/// int K(x3, x2, x1) dx3, which must reproduce the delta kernel.
Complex marginalize_kernel(HalfInt j, const TomographyPoint& x2, const TomographyPoint& x1,
                           const QuadratureGrid& grid);

}  // namespace spintomo
