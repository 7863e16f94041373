#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "spintomo/complex_matrix.hpp"
#include "spintomo/half_int.hpp"
#include "spintomo/spin_operators.hpp"

namespace spintomo {

/// A point x = (m, alpha, beta, gamma) of the tomographic sample space.
struct TomographyPoint {
  HalfInt m;
  EulerAngles angles;
};

/// Product quadrature realizing the measure
///   int dx = sum_m (1/8 pi^2) int dalpha int sin(beta) dbeta int dgamma
/// exactly for band-limited integrands: Gauss-Legendre in cos(beta),
/// uniform (trapezoidal on the circle) in alpha and gamma.
///
/// With oversample = 1 the rule is exact for products of up to four
/// spin-j D-functions (harmonic degree <= 4j), which covers every
/// reconstruction and kernel integral in this library.
struct QuadratureGrid {
  HalfInt j;
  std::vector<double> beta;         // beta values of the Gauss-Legendre nodes in cos(beta)
  std::vector<double> beta_weight;  // corresponding GL weights, summing to 2
  std::vector<double> alpha;        // uniform nodes on [0, 2 pi)
  std::vector<double> gamma;

  int n_beta() const { return static_cast<int>(beta.size()); }
  int n_alpha() const { return static_cast<int>(alpha.size()); }
  int n_gamma() const { return static_cast<int>(gamma.size()); }

  /// Number of (beta, alpha, gamma) triples.
  std::size_t angle_count() const { return beta.size() * alpha.size() * gamma.size(); }
  /// Total points including the m label.
  std::size_t point_count() const { return angle_count() * dimension(j); }

  EulerAngles angles_at(std::size_t angle_index) const;
  /// Measure carried by one (beta, alpha, gamma) node (same for every m);
  /// summing weight * 1 over all m and nodes gives 2j+1.
  double weight_at(std::size_t angle_index) const;
};

QuadratureGrid make_grid(HalfInt j, int oversample = 1);

/// Gauss-Legendre rule on [-1, 1] (exposed for tests).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Tomogram (or symbol) values sampled on a grid.
/// values[m_index * angle_count + angle_index], m descending from j.
struct Tomogram {
  HalfInt j;
  QuadratureGrid grid;
  std::vector<double> values;

  double& at(int m_index, std::size_t angle_index) {
    return values[m_index * grid.angle_count() + angle_index];
  }
  double at(int m_index, std::size_t angle_index) const {
    return values[m_index * grid.angle_count() + angle_index];
  }
};

struct TomogramDiagnostics {
  double min_value = 0.0;
  double max_value = 0.0;
  double max_m_sum_deviation = 0.0;   // max over nodes of |sum_m w - 1|
  double integral_deviation = 0.0;    // |int w dx - 1|
};
TomogramDiagnostics tomogram_diagnostics(const Tomogram& w);

/// Dequantizer U(x) = u^dag |jm><jm| u = sum_L f_L(m) u^dag S_L u.
/// Rank-1 projector: Hermitian, PSD, trace 1, idempotent.
ComplexMatrix dequantizer(HalfInt j, const TomographyPoint& x, const SLBasis& basis);

/// Quantizer D(x) = sum_L (2L+1) f_L(m) u^dag S_L u. Hermitian, trace 1,
/// generally non-positive.
ComplexMatrix quantizer(HalfInt j, const TomographyPoint& x, const SLBasis& basis);

/// Dequantizer through the irreducible-tensor expansion
/// sum_{L,M} (-1)^{j-m+M} <jm;j-m|L0> D^L_{0,-M}(angles) T_LM.
ComplexMatrix dequantizer_from_tensor_operators(HalfInt j, const TomographyPoint& x);
/// Same with the (2L+1) weights of the quantizer.
ComplexMatrix quantizer_from_tensor_operators(HalfInt j, const TomographyPoint& x);

/// Dequantizer as the Kronecker delta(m - u^dag J_z u), realized by the
/// uniform phase sum over N_phi = 4j+3 points (exact: the integrand is a
/// trigonometric polynomial of degree <= 2j). Agrees with dequantizer()
/// entrywise for every j.
ComplexMatrix dequantizer_exponential(HalfInt j, const TomographyPoint& x);

/// Quantizer phase-integral form with the sin^2(phi/2) weight, N_phi = 4j+5.
///
/// Equal to quantizer_from_dequantizer(). For j >= 1 this family differs
/// POINTWISE from quantizer() (at the identity rotation, m=1, spin 1:
/// diag(3,-3/2,0) vs diag(8/3,-4/3,-1/3)); the two coincide for spin 1/2 and
/// are always equivalent under the measure: both reproduce any operator from
/// its symbol, since the difference integrates to zero against every symbol.
ComplexMatrix quantizer_exponential(HalfInt j, const TomographyPoint& x);

/// Shift matrices R+ (superdiagonal of ones) and R- = R+^dag.
std::pair<ComplexMatrix, ComplexMatrix> shift_matrices(HalfInt j);

/// D(x) = (2j+1) [U - R+(u) U R-(u)/2 - R-(u) U R+(u)/2], R+-(u) = u^dag R+- u.
/// Identical to quantizer_exponential (see the pointwise caveat there).
ComplexMatrix quantizer_from_dequantizer(HalfInt j, const TomographyPoint& x,
                                         const SLBasis& basis);

/// Inverse series U = (2j+1)^{-1} sum_k D^(k) with
/// D^(k) = [R+(u) D^(k-1) R-(u) + R-(u) D^(k-1) R+(u)]/2, truncated when
/// ||D^(k)||_F < tol. The series inverts the shift-averaging relation, so
/// D^(0) is the phase-integral quantizer; the sum converges to the
/// dequantizer geometrically at rate cos(pi/(2j+2)). Throws (with the
/// residual) if max_terms is exceeded; max_terms < 0 selects the default
/// 100*(2j+1).
ComplexMatrix dequantizer_from_quantizer(HalfInt j, const TomographyPoint& x,
                                         const SLBasis& basis, double tol,
                                         int max_terms = -1);

/// w(x) = Tr(rho U(x)) = <jm| u rho u^dag |jm>.
double tomogram_value(const DensityMatrix& rho, const TomographyPoint& x);

/// Tomogram of rho sampled on every grid point.
Tomogram sample_tomogram(const DensityMatrix& rho, const QuadratureGrid& grid);

/// rho = int w(x) D(x) dx. Throws std::runtime_error with diagnostics if the
/// result violates the density-matrix invariants.
DensityMatrix reconstruct(const Tomogram& w);

/// int f(x) X(x) dx with X the quantizer (with_quantizer) or dequantizer;
/// the operator-valued integral behind reconstruction and dual symbols.
ComplexMatrix integrate_symbol(const QuadratureGrid& grid, const std::vector<Complex>& symbol,
                               const SLBasis& basis, bool with_quantizer);

/// Quantizer (or dequantizer) at every grid point, indexed like
/// Tomogram::values; the rotated S_L basis is shared across m.
std::vector<ComplexMatrix> grid_operators(const QuadratureGrid& grid, const SLBasis& basis,
                                          bool with_quantizer);

/// w_{j mu}(m, beta) = |d^j_{m mu}(beta)|^2; gamma and alpha drop out.
double pure_state_tomogram(HalfInt j, HalfInt mu, HalfInt m, double beta);

/// Large-j limit of the pure-state tomogram: a Hermite-oscillator density in
/// the scaled variable (m - j cos beta)/(sqrt(j) sin beta), evaluated in log
/// domain. Throws std::domain_error at beta in {0, pi}.
double asymptotic_tomogram(HalfInt j, HalfInt mu, double m, double beta);

/// CSV interface: header `two_m,alpha,beta,gamma,weight,value`, one row per
/// grid point, full double precision.
void write_tomogram_csv(std::ostream& out, const Tomogram& w);

struct TomogramSample {
  int two_m = 0;
  double alpha = 0, beta = 0, gamma = 0, weight = 0, value = 0;
};
std::vector<TomogramSample> read_tomogram_csv(std::istream& in);

/// Reconstruction from raw CSV samples; validates labels against j and that
/// the weights realize the measure (sum = 2j+1).
DensityMatrix reconstruct_from_samples(HalfInt j, const std::vector<TomogramSample>& samples);

}  // namespace spintomo
