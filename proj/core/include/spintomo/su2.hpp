#pragma once

#include <complex>

#include "spintomo/half_int.hpp"

namespace spintomo {

/// ln(n!). Exact factorial below 21, cumulative log sums above.
double ln_factorial(int n);

/// ln C(n, k) for 0 <= k <= n.
double ln_binomial(int n, int k);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
/// convention (Varshalovich). Real; zero when M != m1+m2 or the triangle
/// rule fails. Throws on invalid (j,m) label pairs.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// Wigner small-d function d^j_{m1 m2}(beta).
///
/// Evaluated through the Jacobi-polynomial form with log-domain binomial
/// prefactors; the alternating factorial sum loses ~13 digits at j = 50,
/// the degree recurrence does not.
double wigner_small_d(HalfInt j, HalfInt m1, HalfInt m2, double beta);

/// Wigner D-function D^j_{m1 m2}(alpha,beta,gamma)
///   = exp(-i m2 alpha) exp(-i m1 gamma) d^j_{m1 m2}(beta).
std::complex<double> wigner_D(HalfInt j, HalfInt m1, HalfInt m2, const EulerAngles& angles);

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// ln|H_n(x)| with the sign returned separately; the recurrence is rescaled
/// on the fly so large n and |x| do not overflow. sign == 0 iff H_n(x) == 0.
double hermite_ln_abs(int n, double x, int& sign);

}  // namespace spintomo
