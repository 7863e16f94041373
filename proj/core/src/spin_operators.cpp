#include "spintomo/spin_operators.hpp"

#include <cmath>
#include <stdexcept>

namespace spintomo {

namespace {

/// LU solve with partial pivoting; also reports the determinant.
/// Mathematically identical to Cramer's rule on these small systems.
std::vector<double> lu_solve(std::vector<std::vector<double>> a, std::vector<double> rhs,
                             double& det) {
  const int n = static_cast<int>(rhs.size());
  det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) throw std::runtime_error("lu_solve: singular system");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(rhs[pivot], rhs[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      a[r][col] = 0.0;
      for (int c = col + 1; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

double poly_eval(const std::vector<double>& coeffs, int low_power, double m) {
  // coeffs[i] multiplies m^(low_power + 2i)
  double acc = 0.0;
  double p = std::pow(m, low_power);
  const double m2 = m * m;
  for (double c : coeffs) {
    acc += c * p;
    p *= m2;
  }
  return acc;
}

}  // namespace

ComplexMatrix jz_matrix(HalfInt j) {
  const int n = dimension(j);
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) out(i, i) = m_from_index(j, i).value();
  return out;
}

ComplexMatrix rotation_matrix(HalfInt j, const EulerAngles& angles) {
  const int n = dimension(j);
  ComplexMatrix u(n);
  for (int r = 0; r < n; ++r) {
    const HalfInt m1 = m_from_index(j, r);
    for (int c = 0; c < n; ++c) {
      const HalfInt m2 = m_from_index(j, c);
      u(r, c) = wigner_D(j, m1, m2, angles);
    }
  }
  return u;
}

ComplexMatrix tensor_operator(HalfInt j, int L, int M) {
  if (L < 0 || L > j.twice())  // 2j in doubled units
    throw std::invalid_argument("tensor_operator: L outside [0, 2j]");
  if (std::abs(M) > L) throw std::invalid_argument("tensor_operator: |M| > L");

  const int n = dimension(j);
  const HalfInt hL = HalfInt::whole(L);
  const HalfInt hM = HalfInt::whole(M);
  ComplexMatrix t(n);
  for (int r = 0; r < n; ++r) {
    const HalfInt m2 = m_from_index(j, r);
    for (int c = 0; c < n; ++c) {
      const HalfInt m1 = m_from_index(j, c);
      if (m2.twice() - m1.twice() != hM.twice()) continue;  // CG selection rule
      const double cg = clebsch_gordan(j, m2, j, -m1, hL, hM);
      t(r, c) = parity_sign(j - m1) * cg;
    }
  }
  return t;
}

double trace_jz_power(HalfInt j, int k) {
  if (k < 0) throw std::invalid_argument("trace_jz_power: negative power");
  if (k % 2 == 1) return 0.0;
  double s = 0.0;
  for (int i = 0; i < dimension(j); ++i) s += std::pow(m_from_index(j, i).value(), k);
  return s;
}

SLBasis sl_basis(HalfInt j) {
  const int n_ops = dimension(j);  // L = 0 ... 2j
  SLBasis basis;
  basis.j = j;
  basis.ops.reserve(n_ops);
  basis.coeffs.reserve(n_ops);
  basis.norms.reserve(n_ops);
  basis.gram_determinants.reserve(n_ops);

  const double jj1 = j.value() * (j.value() + 1.0);

  for (int L = 0; L < n_ops; ++L) {
    const int parity = L % 2;             // lowest power of J_z in S_L
    const int n_sys = (L - parity) / 2;   // unknowns below the leading coefficient

    // Gram system in Tr J_z^*: row p demands Tr(S_L J_z^(parity+2p)) = 0.
    std::vector<std::vector<double>> gram(n_sys, std::vector<double>(n_sys));
    std::vector<double> rhs(n_sys);
    for (int p = 0; p < n_sys; ++p) {
      for (int q = 0; q < n_sys; ++q) gram[p][q] = trace_jz_power(j, 2 * (p + q + parity));
      rhs[p] = trace_jz_power(j, 2 * (n_sys + p + parity));
    }

    double det = 1.0;  // empty system has unit determinant
    std::vector<double> coeffs(n_sys + 1);
    if (n_sys > 0) {
      const std::vector<double> x = lu_solve(gram, rhs, det);
      // Cramer normalization: leading coefficient -Delta, others Delta * x.
      for (int i = 0; i < n_sys; ++i) coeffs[i] = det * x[i];
    }
    coeffs[n_sys] = -det;

    // Rescale: conventional low-L forms (I, J_z, 3J_z^2 - j(j+1)I, ...), monic above.
    double target_lead = 1.0;
    switch (L) {
      case 0: case 1: target_lead = 1.0; break;
      case 2: target_lead = 3.0; break;
      case 3: target_lead = 5.0; break;
      default: target_lead = 1.0; break;
    }
    const double factor = target_lead / coeffs[n_sys];
    for (double& c : coeffs) c *= factor;
    if (L == 2) coeffs[0] = -jj1;                      // 3 J_z^2 - j(j+1) I
    if (L == 3) coeffs[0] = -(3.0 * jj1 - 1.0);        // 5 J_z^3 - (3j^2+3j-1) J_z

    ComplexMatrix s(dimension(j));
    double norm = 0.0;
    for (int i = 0; i < dimension(j); ++i) {
      const double v = poly_eval(coeffs, parity, m_from_index(j, i).value());
      s(i, i) = v;
      norm += v * v;
    }

    basis.ops.push_back(std::move(s));
    basis.coeffs.push_back(std::move(coeffs));
    basis.norms.push_back(norm);
    basis.gram_determinants.push_back(det);
  }
  return basis;
}

double f_function(const SLBasis& basis, int L, HalfInt m) {
  if (L < 0 || L >= static_cast<int>(basis.ops.size()))
    throw std::invalid_argument("f_function: L outside [0, 2j]");
  require_valid_jm(basis.j, m);
  return poly_eval(basis.coeffs[L], L % 2, m.value()) / basis.norms[L];
}

ComplexMatrix projector(HalfInt j, HalfInt m) {
  require_valid_jm(j, m);
  ComplexMatrix p(dimension(j));
  p(m_index(j, m), m_index(j, m)) = 1.0;
  return p;
}

}  // namespace spintomo
