#include "spintomo/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spintomo {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "multiply");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "add");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "subtract");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

ComplexMatrix scale(Complex s, const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = s * a(i, j);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

HermitianEigen eigh(const ComplexMatrix& a, double tol) {
  const int n = a.dim();
  const double scale = std::max(frobenius_norm(a), 1.0);
  if (!is_hermitian(a, tol * scale))
    throw std::invalid_argument("eigh: matrix is not Hermitian within tolerance");

  ComplexMatrix h = a;
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&h, n]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += std::norm(h(p, q));
    return std::sqrt(2.0 * s);
  };

  const double target = 1e-14 * scale * n;
  const int max_sweeps = 100;
  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("eigh: Jacobi sweep limit reached");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        const double apq = std::abs(hpq);
        if (apq <= 1e-300) continue;
        const Complex phase = hpq / apq;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Plane rotation R: R_pp = c, R_pq = s*phase, R_qp = -s*conj(phase), R_qq = c.
        // Update H <- R^dag H R and V <- V R on the two affected rows/columns.
        for (int r = 0; r < n; ++r) {
          const Complex hrp = h(r, p);
          const Complex hrq = h(r, q);
          h(r, p) = c * hrp - s * std::conj(phase) * hrq;
          h(r, q) = s * phase * hrp + c * hrq;
        }
        for (int r = 0; r < n; ++r) {
          const Complex hpr = h(p, r);
          const Complex hqr = h(q, r);
          h(p, r) = c * hpr - s * phase * hqr;
          h(q, r) = s * std::conj(phase) * hpr + c * hqr;
        }
        for (int r = 0; r < n; ++r) {
          const Complex vrp = v(r, p);
          const Complex vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(phase) * vrq;
          v(r, q) = s * phase * vrp + c * vrq;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&h](int i, int k) { return h(i, i).real() > h(k, k).real(); });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = h(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& a, double tol) {
  return eigh(a, tol).values;
}

std::string matrix_to_json(const ComplexMatrix& a) {
  nlohmann::json j;
  j["dim"] = a.dim();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int r = 0; r < a.dim(); ++r) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int c = 0; c < a.dim(); ++c) {
      re_row.push_back(a(r, c).real());
      im_row.push_back(a(r, c).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump(2);
}

ComplexMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("matrix_from_json: parse error: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw std::runtime_error("matrix_from_json: missing dim/re/im field");
  const int n = j["dim"].get<int>();
  if (n <= 0) throw std::runtime_error("matrix_from_json: dim must be positive");
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw std::runtime_error("matrix_from_json: row count does not match dim");
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(re[r].size()) != n || static_cast<int>(im[r].size()) != n)
      throw std::runtime_error("matrix_from_json: column count does not match dim");
    for (int c = 0; c < n; ++c)
      out(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
  }
  return out;
}

DensityDiagnostics density_diagnostics(const ComplexMatrix& a) {
  DensityDiagnostics d;
  d.hermiticity_residual = max_abs_diff(a, adjoint(a));
  d.trace_deviation = std::abs(trace(a) - Complex(1.0, 0.0));
  // Symmetrize before the spectrum so a residual at the Hermiticity
  // tolerance does not trip the eigensolver's own check.
  const ComplexMatrix sym = scale(0.5, add(a, adjoint(a)));
  const auto ev = eigvals_hermitian(sym, 1e-6);
  d.min_eigenvalue = ev.empty() ? 0.0 : ev.back();
  return d;
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : mat_(m) {
  const DensityDiagnostics d = density_diagnostics(m);
  if (d.hermiticity_residual > 1e-12 || d.trace_deviation > 1e-12 || d.min_eigenvalue < -1e-10) {
    std::ostringstream msg;
    msg << "DensityMatrix: invariant violation (hermiticity residual " << d.hermiticity_residual
        << ", trace deviation " << d.trace_deviation << ", min eigenvalue " << d.min_eigenvalue
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace spintomo
