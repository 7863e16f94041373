// Test-only oracles: independent, deliberately naive implementations used to
// freeze expected values. None of these share code with the library paths
// they check (plain long-double factorials instead of log-domain, the
// alternating factorial sum instead of the Jacobi recurrence, cofactor
// determinants instead of LU).
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spintomo/complex_matrix.hpp"
#include "spintomo/half_int.hpp"

namespace oracles {

inline long double factorial_ld(int n) {
  long double f = 1.0L;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Racah's sum for <j1 m1; j2 m2 | J M> with plain factorials (j small).
inline double racah_clebsch(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  if (tm1 + tm2 != tM) return 0.0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
  if ((tj1 + tj2 + tJ) % 2 != 0) return 0.0;
  auto f = [](int twice) { return factorial_ld(twice / 2); };
  const long double pre =
      std::sqrt((tJ + 1.0L) * f(tj1 + tj2 - tJ) * f(tj1 - tj2 + tJ) * f(-tj1 + tj2 + tJ) /
                f(tj1 + tj2 + tJ + 2) * f(tJ + tM) * f(tJ - tM) * f(tj1 + tm1) * f(tj1 - tm1) *
                f(tj2 + tm2) * f(tj2 - tm2));
  long double sum = 0.0L;
  for (int k = 0; k <= (tj1 + tj2 - tJ) / 2; ++k) {
    const int a1 = tj1 + tj2 - tJ - 2 * k;
    const int a2 = tj1 - tm1 - 2 * k;
    const int a3 = tj2 + tm2 - 2 * k;
    const int a4 = tJ - tj2 + tm1 + 2 * k;
    const int a5 = tJ - tj1 - tm2 + 2 * k;
    if (a1 < 0 || a2 < 0 || a3 < 0 || a4 < 0 || a5 < 0) continue;
    const long double term =
        1.0L / (factorial_ld(k) * f(a1) * f(a2) * f(a3) * f(a4) * f(a5));
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(pre * sum);
}

/// The d-function as the alternating factorial sum (accurate for small j).
inline double wigner_d_sum(int tj, int tm1, int tm2, double beta) {
  const long double pre = std::sqrt(factorial_ld((tj + tm2) / 2) * factorial_ld((tj - tm2) / 2) *
                                    factorial_ld((tj + tm1) / 2) * factorial_ld((tj - tm1) / 2));
  const long double c = std::cos(0.5L * (long double)beta);
  const long double s = std::sin(0.5L * (long double)beta);
  long double sum = 0.0L;
  for (int k = 0; k <= tj; ++k) {  // summation index s of the classical formula
    const int f1 = (tj - tm1) / 2 - k;       // j - m1 - s
    const int f2 = (tj + tm2) / 2 - k;       // j + m2 - s
    const int f3 = (tm1 - tm2) / 2 + k;      // m1 - m2 + s
    if (f1 < 0 || f2 < 0 || f3 < 0) continue;
    const int cos_pow = tj + (tm2 - tm1) / 2 - 2 * k;  // 2j + m2 - m1 - 2s
    const int sin_pow = (tm1 - tm2) / 2 + 2 * k;       // m1 - m2 + 2s
    long double term = pre / (factorial_ld(k) * factorial_ld(f1) * factorial_ld(f2) *
                              factorial_ld(f3));
    term *= std::pow(c, (long double)cos_pow) * std::pow(-s, (long double)sin_pow);
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

/// H_n(x) as the explicit coefficient sum n! sum_k (-1)^k (2x)^(n-2k) / (k! (n-2k)!).
inline double hermite_series(int n, double x) {
  long double sum = 0.0L;
  for (int k = 0; 2 * k <= n; ++k) {
    long double term = factorial_ld(n) / (factorial_ld(k) * factorial_ld(n - 2 * k));
    term *= std::pow(2.0L * (long double)x, (long double)(n - 2 * k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

/// Faulhaber closed forms for sum_{m=-j}^{j} m^k, k = 2 and 4.
inline double trace_jz_power_closed(double j, int k) {
  if (k == 2) return j * (j + 1.0) * (2.0 * j + 1.0) / 3.0;
  if (k == 4) return j * (j + 1.0) * (2.0 * j + 1.0) * (3.0 * j * j + 3.0 * j - 1.0) / 15.0;
  return 0.0;
}

/// Cofactor-expansion determinant (n <= 4 in the tests).
inline double naive_det(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1.0;
  if (n == 1) return a[0][0];
  double det = 0.0;
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<double> row;
      for (int cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * naive_det(minor);
  }
  return det;
}

// --- random fixtures --------------------------------------------------------

inline spintomo::EulerAngles random_angles(std::mt19937_64& eng) {
  std::uniform_real_distribution<double> circle(0.0, 2.0 * 3.14159265358979323846);
  std::uniform_real_distribution<double> cosb(-1.0, 1.0);
  return {circle(eng), std::acos(cosb(eng)), circle(eng)};
}

inline spintomo::ComplexMatrix random_hermitian(int dim, std::mt19937_64& eng) {
  std::normal_distribution<double> gauss;
  spintomo::ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = spintomo::Complex(gauss(eng), gauss(eng));
  return spintomo::scale(0.5, spintomo::add(g, spintomo::adjoint(g)));
}

inline spintomo::DensityMatrix random_density(int dim, std::mt19937_64& eng) {
  std::normal_distribution<double> gauss;
  spintomo::ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = spintomo::Complex(gauss(eng), gauss(eng));
  spintomo::ComplexMatrix rho = spintomo::multiply(g, spintomo::adjoint(g));
  rho = spintomo::scale(1.0 / spintomo::trace(rho).real(), rho);
  return spintomo::DensityMatrix(rho);
}

}  // namespace oracles
