#include "spintomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spintomo/parallel.hpp"

namespace spintomo {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// u^dag X u for diagonal real X (entries d).
ComplexMatrix sandwich_diagonal(const ComplexMatrix& u, const ComplexMatrix& x) {
  const int n = u.dim();
  ComplexMatrix out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Complex s{};
      for (int p = 0; p < n; ++p) s += std::conj(u(p, a)) * x(p, p).real() * u(p, b);
      out(a, b) = s;
    }
  }
  return out;
}

std::vector<ComplexMatrix> rotated_sl(const ComplexMatrix& u, const SLBasis& basis) {
  std::vector<ComplexMatrix> out;
  out.reserve(basis.ops.size());
  for (const ComplexMatrix& s : basis.ops) out.push_back(sandwich_diagonal(u, s));
  return out;
}

ComplexMatrix assemble_operator(HalfInt j, const TomographyPoint& x, const SLBasis& basis,
                                bool quantizer_weights) {
  require_valid_jm(j, x.m);
  if (basis.j != j) throw std::invalid_argument("basis built for a different j");
  const ComplexMatrix u = rotation_matrix(j, x.angles);
  const std::vector<ComplexMatrix> rot = rotated_sl(u, basis);
  ComplexMatrix out(dimension(j));
  for (std::size_t L = 0; L < rot.size(); ++L) {
    double c = f_function(basis, static_cast<int>(L), x.m);
    if (quantizer_weights) c *= 2.0 * static_cast<double>(L) + 1.0;
    out = add(out, scale(c, rot[L]));
  }
  return out;
}

/// Quantizer (or dequantizer) for every m at a fixed rotation, reusing the
/// rotated basis; out[m_index].
std::vector<ComplexMatrix> operators_at_angle(const QuadratureGrid& grid, const SLBasis& basis,
                                              std::size_t angle_index, bool quantizer_weights) {
  const HalfInt j = grid.j;
  const ComplexMatrix u = rotation_matrix(j, grid.angles_at(angle_index));
  const std::vector<ComplexMatrix> rot = rotated_sl(u, basis);
  const int dim = dimension(j);
  std::vector<ComplexMatrix> out(dim, ComplexMatrix(dim));
  for (int mi = 0; mi < dim; ++mi) {
    const HalfInt m = m_from_index(j, mi);
    for (std::size_t L = 0; L < rot.size(); ++L) {
      double c = f_function(basis, static_cast<int>(L), m);
      if (quantizer_weights) c *= 2.0 * static_cast<double>(L) + 1.0;
      out[mi] = add(out[mi], scale(c, rot[L]));
    }
  }
  return out;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one clean-up step
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        x -= p1 / dp;
        break;
      }
    }
    nodes[i] = -x;  // ascending
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    // midpoint node is exactly zero
    nodes[n / 2] = 0.0;
    double p0 = 1.0, p1 = 0.0;
    for (int k = 2; k <= n; ++k) {
      const double p2 = (-(k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (-p0) / (-1.0);
    weights[n / 2] = 2.0 / (dp * dp);
  }
}

EulerAngles QuadratureGrid::angles_at(std::size_t angle_index) const {
  const std::size_t ng = gamma.size();
  const std::size_t na = alpha.size();
  const std::size_t g = angle_index % ng;
  const std::size_t a = (angle_index / ng) % na;
  const std::size_t b = angle_index / (ng * na);
  return EulerAngles(alpha[a], beta[b], gamma[g]);
}

double QuadratureGrid::weight_at(std::size_t angle_index) const {
  const std::size_t b = angle_index / (gamma.size() * alpha.size());
  return beta_weight[b] / (2.0 * static_cast<double>(alpha.size()) * static_cast<double>(gamma.size()));
}

QuadratureGrid make_grid(HalfInt j, int oversample) {
  if (j.twice() < 0) throw std::invalid_argument("make_grid: negative j");
  if (oversample < 1) throw std::invalid_argument("make_grid: oversample must be >= 1");
  QuadratureGrid grid;
  grid.j = j;
  const int n_beta = oversample * (j.twice() + 1) + 1;       // (2j+1) + 1 at oversample 1
  const int n_circle = oversample * (2 * j.twice() + 1) + 1; // (4j+1) + 1
  std::vector<double> t, w;
  gauss_legendre(n_beta, t, w);
  grid.beta.resize(n_beta);
  grid.beta_weight = w;
  for (int i = 0; i < n_beta; ++i) grid.beta[i] = std::acos(std::clamp(t[i], -1.0, 1.0));
  grid.alpha.resize(n_circle);
  grid.gamma.resize(n_circle);
  for (int i = 0; i < n_circle; ++i) {
    grid.alpha[i] = 2.0 * kPi * i / n_circle;
    grid.gamma[i] = 2.0 * kPi * i / n_circle;
  }
  return grid;
}

TomogramDiagnostics tomogram_diagnostics(const Tomogram& w) {
  TomogramDiagnostics d;
  if (w.values.empty()) return d;
  d.min_value = *std::min_element(w.values.begin(), w.values.end());
  d.max_value = *std::max_element(w.values.begin(), w.values.end());
  const int dim = dimension(w.j);
  const std::size_t angles = w.grid.angle_count();
  double integral = 0.0;
  for (std::size_t a = 0; a < angles; ++a) {
    double msum = 0.0;
    for (int mi = 0; mi < dim; ++mi) {
      msum += w.at(mi, a);
      integral += w.at(mi, a) * w.grid.weight_at(a);
    }
    d.max_m_sum_deviation = std::max(d.max_m_sum_deviation, std::abs(msum - 1.0));
  }
  d.integral_deviation = std::abs(integral - 1.0);
  return d;
}

ComplexMatrix dequantizer(HalfInt j, const TomographyPoint& x, const SLBasis& basis) {
  return assemble_operator(j, x, basis, false);
}

ComplexMatrix quantizer(HalfInt j, const TomographyPoint& x, const SLBasis& basis) {
  return assemble_operator(j, x, basis, true);
}

namespace {

ComplexMatrix tensor_expansion(HalfInt j, const TomographyPoint& x, bool quantizer_weights) {
  require_valid_jm(j, x.m);
  const int dim = dimension(j);
  ComplexMatrix out(dim);
  for (int L = 0; L <= j.twice(); ++L) {
    const double cg = clebsch_gordan(j, x.m, j, -x.m, HalfInt::whole(L), HalfInt::whole(0));
    if (cg == 0.0) continue;
    const double weight = quantizer_weights ? (2.0 * L + 1.0) : 1.0;
    for (int M = -L; M <= L; ++M) {
      const double sign = ((j - x.m).to_int() + M) % 2 == 0 ? 1.0 : -1.0;
      const Complex rot =
          wigner_D(HalfInt::whole(L), HalfInt::whole(0), HalfInt::whole(-M), x.angles);
      const ComplexMatrix t = tensor_operator(j, L, M);
      out = add(out, scale(weight * sign * cg * rot, t));
    }
  }
  return out;
}

/// Phase sums assembled through an eigendecomposition of u^dag J_z u that
/// does not reuse the rotation itself.
ComplexMatrix phase_integral(HalfInt j, const TomographyPoint& x, bool quantizer_weights) {
  require_valid_jm(j, x.m);
  const ComplexMatrix u = rotation_matrix(j, x.angles);
  const ComplexMatrix a = multiply(multiply(adjoint(u), jz_matrix(j)), u);
  const HermitianEigen eig = eigh(a);
  const int dim = dimension(j);
  const int n_phi = 2 * j.twice() + (quantizer_weights ? 5 : 3);  // 4j+5 / 4j+3
  const double mv = x.m.value();

  std::vector<Complex> diag(dim);
  for (int p = 0; p < dim; ++p) {
    Complex s{};
    for (int k = 0; k < n_phi; ++k) {
      const double phi = 2.0 * kPi * k / n_phi;
      const double arg = (mv - eig.values[p]) * phi;
      double weight = 1.0;
      if (quantizer_weights) {
        const double sh = std::sin(0.5 * phi);
        weight = sh * sh * 2.0 * (j.twice() + 1.0);
      }
      s += weight * Complex(std::cos(arg), std::sin(arg));
    }
    diag[p] = s / static_cast<double>(n_phi);
  }

  ComplexMatrix out(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      Complex s{};
      for (int p = 0; p < dim; ++p) s += eig.vectors(r, p) * diag[p] * std::conj(eig.vectors(c, p));
      out(r, c) = s;
    }
  return out;
}

}  // namespace

ComplexMatrix dequantizer_from_tensor_operators(HalfInt j, const TomographyPoint& x) {
  return tensor_expansion(j, x, false);
}

ComplexMatrix quantizer_from_tensor_operators(HalfInt j, const TomographyPoint& x) {
  return tensor_expansion(j, x, true);
}

ComplexMatrix dequantizer_exponential(HalfInt j, const TomographyPoint& x) {
  return phase_integral(j, x, false);
}

ComplexMatrix quantizer_exponential(HalfInt j, const TomographyPoint& x) {
  return phase_integral(j, x, true);
}

std::pair<ComplexMatrix, ComplexMatrix> shift_matrices(HalfInt j) {
  const int dim = dimension(j);
  ComplexMatrix plus(dim);
  for (int i = 0; i + 1 < dim; ++i) plus(i, i + 1) = 1.0;
  return {plus, adjoint(plus)};
}

ComplexMatrix quantizer_from_dequantizer(HalfInt j, const TomographyPoint& x,
                                         const SLBasis& basis) {
  const ComplexMatrix u = rotation_matrix(j, x.angles);
  const auto [rp, rm] = shift_matrices(j);
  const ComplexMatrix rpu = multiply(multiply(adjoint(u), rp), u);
  const ComplexMatrix rmu = multiply(multiply(adjoint(u), rm), u);
  const ComplexMatrix uop = dequantizer(j, x, basis);
  ComplexMatrix out = uop;
  out = subtract(out, scale(0.5, multiply(multiply(rpu, uop), rmu)));
  out = subtract(out, scale(0.5, multiply(multiply(rmu, uop), rpu)));
  return scale(static_cast<double>(dimension(j)), out);
}

ComplexMatrix dequantizer_from_quantizer(HalfInt j, const TomographyPoint& x,
                                         const SLBasis& basis, double tol, int max_terms) {
  if (tol <= 0.0) throw std::invalid_argument("dequantizer_from_quantizer: tol must be positive");
  if (max_terms < 0) max_terms = 100 * dimension(j);
  const ComplexMatrix u = rotation_matrix(j, x.angles);
  const auto [rp, rm] = shift_matrices(j);
  const ComplexMatrix rpu = multiply(multiply(adjoint(u), rp), u);
  const ComplexMatrix rmu = multiply(multiply(adjoint(u), rm), u);

  ComplexMatrix term = quantizer_from_dequantizer(j, x, basis);
  ComplexMatrix sum = term;
  for (int k = 1; k <= max_terms; ++k) {
    term = scale(0.5, add(multiply(multiply(rpu, term), rmu), multiply(multiply(rmu, term), rpu)));
    sum = add(sum, term);
    if (frobenius_norm(term) < tol) return scale(1.0 / dimension(j), sum);
  }
  std::ostringstream msg;
  msg << "dequantizer_from_quantizer: series did not reach tol=" << tol << " within "
      << max_terms << " terms (residual " << frobenius_norm(term) << ")";
  throw std::runtime_error(msg.str());
}

double tomogram_value(const DensityMatrix& rho, const TomographyPoint& x) {
  const HalfInt j = HalfInt::from_twice(rho.dim() - 1);
  require_valid_jm(j, x.m);
  const ComplexMatrix u = rotation_matrix(j, x.angles);
  const int r = m_index(j, x.m);
  Complex w{};
  for (int a = 0; a < rho.dim(); ++a)
    for (int b = 0; b < rho.dim(); ++b) w += u(r, a) * rho.matrix()(a, b) * std::conj(u(r, b));
  if (std::abs(w.imag()) > 1e-12)
    throw std::runtime_error("tomogram_value: non-real tomogram value");
  return w.real();
}

Tomogram sample_tomogram(const DensityMatrix& rho, const QuadratureGrid& grid) {
  if (rho.dim() != dimension(grid.j))
    throw std::invalid_argument("sample_tomogram: density matrix does not match grid j");
  Tomogram w;
  w.j = grid.j;
  w.grid = grid;
  w.values.assign(grid.point_count(), 0.0);
  const int dim = rho.dim();
  const std::size_t angles = grid.angle_count();
  std::vector<double> chunk_imag(thread_count(), 0.0);
  parallel_chunks(angles, [&](int chunk, std::size_t begin, std::size_t end) {
    double local_imag = 0.0;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const ComplexMatrix u = rotation_matrix(grid.j, grid.angles_at(idx));
      // diagonal of u rho u^dag
      for (int mi = 0; mi < dim; ++mi) {
        Complex v{};
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b) v += u(mi, a) * rho.matrix()(a, b) * std::conj(u(mi, b));
        local_imag = std::max(local_imag, std::abs(v.imag()));
        w.at(mi, idx) = v.real();
      }
    }
    chunk_imag[chunk] = local_imag;
  });
  if (*std::max_element(chunk_imag.begin(), chunk_imag.end()) > 1e-12)
    throw std::runtime_error("sample_tomogram: non-real tomogram value");
  return w;
}

ComplexMatrix integrate_symbol(const QuadratureGrid& grid, const std::vector<Complex>& symbol,
                               const SLBasis& basis, bool with_quantizer) {
  if (symbol.size() != grid.point_count())
    throw std::invalid_argument("integrate_symbol: sample count does not match grid");
  const int dim = dimension(grid.j);
  const std::size_t angles = grid.angle_count();
  const int workers = thread_count();
  std::vector<ComplexMatrix> partial(workers, ComplexMatrix(dim));
  parallel_chunks(angles, [&](int chunk, std::size_t begin, std::size_t end) {
    ComplexMatrix acc(dim);
    for (std::size_t idx = begin; idx < end; ++idx) {
      const ComplexMatrix u = rotation_matrix(grid.j, grid.angles_at(idx));
      const std::vector<ComplexMatrix> rot = rotated_sl(u, basis);
      const double wgt = grid.weight_at(idx);
      for (std::size_t L = 0; L < rot.size(); ++L) {
        Complex coef{};
        for (int mi = 0; mi < dim; ++mi) {
          const HalfInt m = m_from_index(grid.j, mi);
          coef += symbol[mi * angles + idx] * f_function(basis, static_cast<int>(L), m);
        }
        if (with_quantizer) coef *= 2.0 * static_cast<double>(L) + 1.0;
        acc = add(acc, scale(coef * wgt, rot[L]));
      }
    }
    partial[chunk] = acc;
  });
  ComplexMatrix out(dim);
  for (const ComplexMatrix& p : partial) out = add(out, p);
  return out;
}

std::vector<ComplexMatrix> grid_operators(const QuadratureGrid& grid, const SLBasis& basis,
                                          bool with_quantizer) {
  const int dim = dimension(grid.j);
  const std::size_t angles = grid.angle_count();
  std::vector<ComplexMatrix> out(grid.point_count(), ComplexMatrix(dim));
  parallel_chunks(angles, [&](int, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::vector<ComplexMatrix> ops = operators_at_angle(grid, basis, idx, with_quantizer);
      for (int mi = 0; mi < dim; ++mi) out[mi * angles + idx] = std::move(ops[mi]);
    }
  });
  return out;
}

DensityMatrix reconstruct(const Tomogram& w) {
  const SLBasis basis = sl_basis(w.j);
  std::vector<Complex> symbol(w.values.begin(), w.values.end());
  const ComplexMatrix rho = integrate_symbol(w.grid, symbol, basis, true);
  try {
    return DensityMatrix(rho);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("reconstruct: ") + e.what());
  }
}

double pure_state_tomogram(HalfInt j, HalfInt mu, HalfInt m, double beta) {
  const double d = wigner_small_d(j, m, mu, beta);
  return d * d;
}

double asymptotic_tomogram(HalfInt j, HalfInt mu, double m, double beta) {
  require_valid_jm(j, mu, "(j,mu)");
  const double sb = std::sin(beta);
  if (beta <= 0.0 || beta >= kPi || sb == 0.0)
    throw std::domain_error("asymptotic_tomogram: singular at beta in {0, pi}");
  const int n = (j.twice() - mu.twice()) / 2;  // j - mu
  const double jv = j.value();
  const double q = (m - jv * std::cos(beta)) / (std::sqrt(jv) * sb);
  int sign = 0;
  const double ln_h = hermite_ln_abs(n, q, sign);
  if (sign == 0) return 0.0;
  const double ln_w = -0.5 * std::log(kPi * jv * sb * sb) - n * std::log(2.0) -
                      ln_factorial(n) - q * q + 2.0 * ln_h;
  return std::exp(ln_w);
}

void write_tomogram_csv(std::ostream& out, const Tomogram& w) {
  out << "two_m,alpha,beta,gamma,weight,value\n";
  char line[256];
  const int dim = dimension(w.j);
  const std::size_t angles = w.grid.angle_count();
  for (std::size_t idx = 0; idx < angles; ++idx) {
    const EulerAngles ang = w.grid.angles_at(idx);
    const double wgt = w.grid.weight_at(idx);
    for (int mi = 0; mi < dim; ++mi) {
      const int two_m = m_from_index(w.j, mi).twice();
      std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", two_m, ang.alpha,
                    ang.beta, ang.gamma, wgt, w.at(mi, idx));
      out << line;
    }
  }
}

std::vector<TomogramSample> read_tomogram_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("tomogram CSV: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "two_m,alpha,beta,gamma,weight,value")
    throw std::runtime_error("tomogram CSV: unexpected header '" + line + "'");
  std::vector<TomogramSample> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    TomogramSample s;
    char* cursor = line.data();
    char* end = nullptr;
    auto next_field = [&](bool last) -> double {
      const double v = std::strtod(cursor, &end);
      if (end == cursor || (*end != (last ? '\0' : ',')))
        throw std::runtime_error("tomogram CSV: malformed row at line " + std::to_string(line_no));
      cursor = last ? end : end + 1;
      return v;
    };
    const double two_m = next_field(false);
    s.two_m = static_cast<int>(two_m);
    if (static_cast<double>(s.two_m) != two_m)
      throw std::runtime_error("tomogram CSV: non-integer two_m at line " + std::to_string(line_no));
    s.alpha = next_field(false);
    s.beta = next_field(false);
    s.gamma = next_field(false);
    s.weight = next_field(false);
    s.value = next_field(true);
    samples.push_back(s);
  }
  if (samples.empty()) throw std::runtime_error("tomogram CSV: no data rows");
  return samples;
}

DensityMatrix reconstruct_from_samples(HalfInt j, const std::vector<TomogramSample>& samples) {
  const SLBasis basis = sl_basis(j);
  const int dim = dimension(j);
  double weight_sum = 0.0;
  ComplexMatrix rho(dim);

  bool have_cached = false;
  EulerAngles cached_angles;
  std::vector<ComplexMatrix> rot;

  for (const TomogramSample& s : samples) {
    const HalfInt m = HalfInt::from_twice(s.two_m);
    if (!valid_jm(j, m))
      throw std::invalid_argument("reconstruct_from_samples: sample with two_m=" +
                                  std::to_string(s.two_m) + " does not belong to j=" + j.str());
    if (s.weight <= 0.0)
      throw std::invalid_argument("reconstruct_from_samples: nonpositive weight");
    weight_sum += s.weight;
    const EulerAngles ang(s.alpha, s.beta, s.gamma);
    if (!have_cached || ang.alpha != cached_angles.alpha || ang.beta != cached_angles.beta ||
        ang.gamma != cached_angles.gamma) {
      rot = rotated_sl(rotation_matrix(j, ang), basis);
      cached_angles = ang;
      have_cached = true;
    }
    for (std::size_t L = 0; L < rot.size(); ++L) {
      const double c = (2.0 * L + 1.0) * f_function(basis, static_cast<int>(L), m);
      rho = add(rho, scale(c * s.weight * s.value, rot[L]));
    }
  }

  // The weights must realize int dx 1 = (2j+1) * m-average = dim per full grid.
  if (std::abs(weight_sum - dim) > 1e-6 * dim)
    throw std::invalid_argument(
        "reconstruct_from_samples: grid metadata mismatch (weights sum to " +
        std::to_string(weight_sum) + ", expected " + std::to_string(dim) + ")");
  try {
    return DensityMatrix(rho);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("reconstruct_from_samples: ") + e.what());
  }
}

}  // namespace spintomo
