#include "spintomo/su2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace spintomo {

namespace {

std::vector<double> build_ln_factorial_table(int size) {
  std::vector<double> table(size);
  // n <= 20 fits a 64-bit integer, so log of the exact product is one rounding.
  std::uint64_t exact = 1;
  for (int n = 0; n <= 20 && n < size; ++n) {
    if (n > 0) exact *= static_cast<std::uint64_t>(n);
    table[n] = std::log(static_cast<double>(exact));
  }
  for (int n = 21; n < size; ++n) table[n] = table[n - 1] + std::log(static_cast<double>(n));
  return table;
}

const std::vector<double>& ln_factorial_table() {
  static const std::vector<double> table = build_ln_factorial_table(4096);
  return table;
}

}  // namespace

double ln_factorial(int n) {
  if (n < 0) throw std::invalid_argument("ln_factorial: negative argument");
  const auto& table = ln_factorial_table();
  if (n < static_cast<int>(table.size())) return table[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double ln_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("ln_binomial: k outside [0,n]");
  return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  require_valid_jm(j1, m1, "(j1,m1)");
  require_valid_jm(j2, m2, "(j2,m2)");
  require_valid_jm(J, M, "(J,M)");

  const int tj1 = j1.twice(), tj2 = j2.twice(), tJ = J.twice();
  const int tm1 = m1.twice(), tm2 = m2.twice(), tM = M.twice();
  if (tm1 + tm2 != tM) return 0.0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
  if ((tj1 + tj2 + tJ) % 2 != 0) return 0.0;

  // Racah's single-sum formula, factorial ratios in log domain.
  auto lf = [](int twice) { return ln_factorial(twice / 2); };
  const double ln_pre =
      0.5 * (std::log(tJ + 1.0) +
             lf(tj1 + tj2 - tJ) + lf(tj1 - tj2 + tJ) + lf(-tj1 + tj2 + tJ) -
             lf(tj1 + tj2 + tJ + 2) +
             lf(tJ + tM) + lf(tJ - tM) +
             lf(tj1 + tm1) + lf(tj1 - tm1) + lf(tj2 + tm2) + lf(tj2 - tm2));

  // Summation index k bounds from the nonnegativity of every factorial argument.
  const int k_min = std::max({0, -(tJ - tj2 + tm1) / 2, -(tJ - tj1 - tm2) / 2});
  const int k_max = std::min({(tj1 + tj2 - tJ) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
  if (k_min > k_max) return 0.0;

  // Scale by the largest term to keep the alternating sum well conditioned.
  std::vector<double> ln_terms(k_max - k_min + 1);
  double ln_max = -1e300;
  for (int k = k_min; k <= k_max; ++k) {
    const double ln_term = -(ln_factorial(k) +
                             lf(tj1 + tj2 - tJ - 2 * k) + lf(tj1 - tm1 - 2 * k) +
                             lf(tj2 + tm2 - 2 * k) + lf(tJ - tj2 + tm1 + 2 * k) +
                             lf(tJ - tj1 - tm2 + 2 * k));
    ln_terms[k - k_min] = ln_term;
    ln_max = std::max(ln_max, ln_term);
  }
  double sum = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double mag = std::exp(ln_terms[k - k_min] - ln_max);
    sum += (k % 2 == 0) ? mag : -mag;
  }
  return sum * std::exp(ln_pre + ln_max);
}

double wigner_small_d(HalfInt j, HalfInt m1, HalfInt m2, double beta) {
  require_valid_jm(j, m1, "(j,m1)");
  require_valid_jm(j, m2, "(j,m2)");

  const int tj = j.twice(), t1 = m1.twice(), t2 = m2.twice();
  const int twice_k = std::min({tj + t2, tj - t2, tj + t1, tj - t1});
  const int k = twice_k / 2;

  // Jacobi-form parameters; lambda carries the sign convention.
  int a, lambda;
  if (twice_k == tj + t2 || twice_k == tj - t1) {
    a = (t1 - t2) / 2;
    lambda = a;
  } else {
    a = (t2 - t1) / 2;
    lambda = 0;
  }
  const int b = tj - 2 * k - a;

  const double half = 0.5 * beta;
  const double s = std::sin(half);
  const double c = std::cos(half);

  // (sin)^a (cos)^b together with the binomial prefactor, in log domain.
  double ln_pre = 0.5 * (ln_binomial(tj - k, k + a) - ln_binomial(k + b, b));
  if (a > 0) {
    if (s == 0.0) return 0.0;
    ln_pre += a * std::log(s);
  }
  if (b > 0) {
    if (c == 0.0) return 0.0;
    ln_pre += b * std::log(c);
  }

  // Jacobi polynomial P_k^{(a,b)}(cos beta) by the degree recurrence.
  const double x = std::cos(beta);
  double p_prev = 1.0;
  double p = (a - b) / 2.0 + (a + b + 2) / 2.0 * x;
  if (k == 0) p = p_prev;
  for (int n = 2; n <= k; ++n) {
    const double c1 = 2.0 * n * (n + a + b) * (2.0 * n + a + b - 2);
    const double c2 = (2.0 * n + a + b - 1) *
                      ((2.0 * n + a + b) * (2.0 * n + a + b - 2) * x +
                       static_cast<double>(a) * a - static_cast<double>(b) * b);
    const double c3 = 2.0 * (n + a - 1) * (n + b - 1) * (2.0 * n + a + b);
    const double p_next = (c2 * p - c3 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }

  const double sign = (lambda % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(ln_pre) * p;
}

std::complex<double> wigner_D(HalfInt j, HalfInt m1, HalfInt m2, const EulerAngles& angles) {
  const double d = wigner_small_d(j, m1, m2, angles.beta);
  const double phase = -(m2.value() * angles.alpha + m1.value() * angles.gamma);
  return {d * std::cos(phase), d * std::sin(phase)};
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: negative degree");
  double h_prev = 1.0;
  if (n == 0) return h_prev;
  double h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double h_next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = h_next;
  }
  return h;
}

double hermite_ln_abs(int n, double x, int& sign) {
  if (n < 0) throw std::invalid_argument("hermite_ln_abs: negative degree");
  double h_prev = 1.0;
  double h = 2.0 * x;
  double ln_scale = 0.0;
  if (n == 0) h = h_prev;
  for (int k = 1; k < n; ++k) {
    const double h_next = 2.0 * x * h - 2.0 * k * h_prev;
    h_prev = h;
    h = h_next;
    const double mag = std::max(std::abs(h), std::abs(h_prev));
    if (mag > 1e150) {
      h /= 1e150;
      h_prev /= 1e150;
      ln_scale += std::log(1e150);
    }
  }
  if (h == 0.0) {
    sign = 0;
    return -std::numeric_limits<double>::infinity();
  }
  sign = h > 0.0 ? 1 : -1;
  return std::log(std::abs(h)) + ln_scale;
}

}  // namespace spintomo
