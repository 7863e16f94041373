#include "spintomo/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "spintomo/parallel.hpp"

namespace spintomo {

namespace {

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = a.dim();
  Complex t{};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) t += a(i, k) * b(k, i);
  return t;
}

Complex trace_triple(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return trace_product(multiply(a, b), c);
}

}  // namespace

AxisVector axis_vector(const EulerAngles& angles) {
  const double sb = std::sin(angles.beta);
  return {std::cos(angles.alpha) * sb, std::sin(angles.alpha) * sb, std::cos(angles.beta)};
}

double dot(const AxisVector& a, const AxisVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

AxisVector cross(const AxisVector& a, const AxisVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double triple(const AxisVector& a, const AxisVector& b, const AxisVector& c) {
  return dot(a, cross(b, c));
}

Complex symbol(const ComplexMatrix& a, const TomographyPoint& x) {
  const HalfInt j = HalfInt::from_twice(a.dim() - 1);
  require_valid_jm(j, x.m);
  const ComplexMatrix u = rotation_matrix(j, x.angles);
  const int r = m_index(j, x.m);
  Complex s{};
  for (int p = 0; p < a.dim(); ++p)
    for (int q = 0; q < a.dim(); ++q) s += u(r, p) * a(p, q) * std::conj(u(r, q));
  return s;
}

Complex dual_symbol(const ComplexMatrix& b, const TomographyPoint& x, const SLBasis& basis) {
  const HalfInt j = basis.j;
  if (b.dim() != dimension(j))
    throw std::invalid_argument("dual_symbol: operator dimension does not match basis");
  return trace_product(b, quantizer(j, x, basis));
}

Complex dual_symbol(const ComplexMatrix& b, const TomographyPoint& x) {
  return dual_symbol(b, x, sl_basis(HalfInt::from_twice(b.dim() - 1)));
}

std::vector<Complex> sample_symbol(const ComplexMatrix& a, const QuadratureGrid& grid) {
  if (a.dim() != dimension(grid.j))
    throw std::invalid_argument("sample_symbol: operator dimension does not match grid");
  const int dim = a.dim();
  const std::size_t angles = grid.angle_count();
  std::vector<Complex> out(grid.point_count());
  parallel_chunks(angles, [&](int, std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const ComplexMatrix u = rotation_matrix(grid.j, grid.angles_at(idx));
      for (int mi = 0; mi < dim; ++mi) {
        Complex v{};
        for (int p = 0; p < dim; ++p)
          for (int q = 0; q < dim; ++q) v += u(mi, p) * a(p, q) * std::conj(u(mi, q));
        out[mi * angles + idx] = v;
      }
    }
  });
  return out;
}

std::vector<Complex> sample_dual_symbol(const ComplexMatrix& b, const QuadratureGrid& grid,
                                        const SLBasis& basis) {
  if (b.dim() != dimension(grid.j))
    throw std::invalid_argument("sample_dual_symbol: operator dimension does not match grid");
  const std::vector<ComplexMatrix> quantizers = grid_operators(grid, basis, true);
  std::vector<Complex> out(quantizers.size());
  for (std::size_t i = 0; i < quantizers.size(); ++i) out[i] = trace_product(b, quantizers[i]);
  return out;
}

Complex delta_kernel_numeric(HalfInt j, const TomographyPoint& x2, const TomographyPoint& x1,
                             const SLBasis& basis) {
  return trace_product(quantizer(j, x2, basis), dequantizer(j, x1, basis));
}

Complex star_kernel_numeric(HalfInt j, const TomographyPoint& x3, const TomographyPoint& x2,
                            const TomographyPoint& x1, const SLBasis& basis) {
  return trace_triple(quantizer(j, x3, basis), quantizer(j, x2, basis), dequantizer(j, x1, basis));
}

Complex dual_kernel_numeric(HalfInt j, const TomographyPoint& x3, const TomographyPoint& x2,
                            const TomographyPoint& x1, const SLBasis& basis) {
  return trace_triple(dequantizer(j, x3, basis), dequantizer(j, x2, basis),
                      quantizer(j, x1, basis));
}

double delta_kernel_qubit(double m2, const AxisVector& n2, double m1, const AxisVector& n1) {
  return 0.5 + 6.0 * m1 * m2 * dot(n1, n2);
}

double delta_kernel_qutrit(double m2, const AxisVector& n2, double m1, const AxisVector& n1) {
  const double d12 = dot(n1, n2);
  return 1.0 / 3.0 + 1.5 * m1 * m2 * d12 +
         (5.0 / 12.0) * (3.0 * m1 * m1 - 2.0) * (3.0 * m2 * m2 - 2.0) * (3.0 * d12 * d12 - 1.0);
}

Complex star_kernel_qubit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                          double m1, const AxisVector& n1) {
  const double re = 0.25 + 3.0 * m1 * m2 * dot(n1, n2) + 9.0 * m2 * m3 * dot(n2, n3) +
                    3.0 * m1 * m3 * dot(n3, n1);
  const double im = 18.0 * m1 * m2 * m3 * triple(n1, n2, n3);
  return {re, im};
}

Complex star_kernel_qutrit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                           double m1, const AxisVector& n1) {
  const double d12 = dot(n1, n2), d23 = dot(n2, n3), d31 = dot(n3, n1);
  const double t = triple(n1, n2, n3);
  const double p1 = 3.0 * m1 * m1 - 2.0, p2 = 3.0 * m2 * m2 - 2.0, p3 = 3.0 * m3 * m3 - 2.0;
  const double brace = 3.0 * d12 * dot(cross(n1, n3), cross(n2, n3)) +
                       3.0 * d23 * dot(cross(n2, n1), cross(n3, n1)) +
                       3.0 * d31 * dot(cross(n3, n2), cross(n1, n2)) - 2.0;
  double re = 1.0 / 9.0;
  re += 0.5 * m1 * m2 * d12 + 1.5 * m2 * m3 * d23 + 0.5 * m1 * m3 * d31;
  re += (5.0 / 36.0) * p1 * p2 * (3.0 * d12 * d12 - 1.0);
  re += (25.0 / 36.0) * p2 * p3 * (3.0 * d23 * d23 - 1.0);
  re += (5.0 / 36.0) * p1 * p3 * (3.0 * d31 * d31 - 1.0);
  re += (3.0 / 8.0) * p1 * m2 * m3 * (3.0 * d12 * d31 - d23);
  re += (5.0 / 8.0) * m1 * p2 * m3 * (3.0 * d23 * d12 - d31);
  re += (5.0 / 8.0) * m1 * m2 * p3 * (3.0 * d31 * d23 - d12);
  re += (25.0 / 72.0) * p1 * p2 * p3 * brace;
  double im = (9.0 / 8.0) * m1 * m2 * m3 * t;
  im += (25.0 / 8.0) * m1 * p2 * p3 * d23 * t;
  im += (15.0 / 8.0) * p1 * m2 * p3 * d31 * t;
  im += (15.0 / 8.0) * p1 * p2 * m3 * d12 * t;
  return {re, im};
}

Complex dual_kernel_qubit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                          double m1, const AxisVector& n1) {
  const double re = 0.25 + 3.0 * m1 * m2 * dot(n1, n2) + m2 * m3 * dot(n2, n3) +
                    3.0 * m1 * m3 * dot(n3, n1);
  const double im = 6.0 * m1 * m2 * m3 * triple(n1, n2, n3);
  return {re, im};
}

Complex dual_kernel_qutrit(double m3, const AxisVector& n3, double m2, const AxisVector& n2,
                           double m1, const AxisVector& n1) {
  const double d12 = dot(n1, n2), d23 = dot(n2, n3), d31 = dot(n3, n1);
  const double t = triple(n1, n2, n3);
  const double p1 = 3.0 * m1 * m1 - 2.0, p2 = 3.0 * m2 * m2 - 2.0, p3 = 3.0 * m3 * m3 - 2.0;
  const double brace = 3.0 * d12 * dot(cross(n1, n3), cross(n2, n3)) +
                       3.0 * d23 * dot(cross(n2, n1), cross(n3, n1)) +
                       3.0 * d31 * dot(cross(n3, n2), cross(n1, n2)) - 2.0;
  double re = 1.0 / 9.0;
  re += 0.5 * m1 * m2 * d12 + (1.0 / 6.0) * m2 * m3 * d23 + 0.5 * m1 * m3 * d31;
  re += (5.0 / 36.0) * p1 * p2 * (3.0 * d12 * d12 - 1.0);
  re += (1.0 / 36.0) * p2 * p3 * (3.0 * d23 * d23 - 1.0);
  re += (5.0 / 36.0) * p1 * p3 * (3.0 * d31 * d31 - 1.0);
  re += (5.0 / 24.0) * p1 * m2 * m3 * (3.0 * d12 * d31 - d23);
  re += (1.0 / 8.0) * m1 * p2 * m3 * (3.0 * d23 * d12 - d31);
  re += (1.0 / 8.0) * m1 * m2 * p3 * (3.0 * d31 * d23 - d12);
  re += (5.0 / 72.0) * p1 * p2 * p3 * brace;
  double im = (3.0 / 8.0) * m1 * m2 * m3 * t;
  im += (3.0 / 8.0) * m1 * p2 * p3 * d23 * t;
  im += (5.0 / 8.0) * p1 * m2 * p3 * d31 * t;
  im += (5.0 / 8.0) * p1 * p2 * m3 * d12 * t;
  return {re, im};
}

Complex star_product(const QuadratureGrid& grid, const std::vector<Complex>& f_a,
                     const std::vector<Complex>& f_b, const TomographyPoint& x1,
                     bool allow_large) {
  if (f_a.size() != grid.point_count() || f_b.size() != grid.point_count())
    throw std::invalid_argument("star_product: symbol samples do not match the grid");
  if (grid.j.twice() > 2 && !allow_large)
    throw std::invalid_argument("star_product: grid beyond j=1 requires allow_large");

  const SLBasis basis = sl_basis(grid.j);
  const std::vector<ComplexMatrix> quantizers = grid_operators(grid, basis, true);
  const ComplexMatrix u1 = dequantizer(grid.j, x1, basis);
  const std::size_t angles = grid.angle_count();
  const std::size_t points = grid.point_count();

  const int workers = thread_count();
  std::vector<Complex> partial(workers, Complex{});
  parallel_chunks(points, [&](int chunk, std::size_t begin, std::size_t end) {
    Complex acc{};
    for (std::size_t i2 = begin; i2 < end; ++i2) {
      const double w2 = grid.weight_at(i2 % angles);
      const ComplexMatrix d2u1 = multiply(quantizers[i2], u1);
      Complex inner{};
      for (std::size_t i3 = 0; i3 < points; ++i3) {
        const double w3 = grid.weight_at(i3 % angles);
        inner += f_a[i3] * w3 * trace_product(quantizers[i3], d2u1);
      }
      acc += f_b[i2] * w2 * inner;
    }
    partial[chunk] = acc;
  });
  Complex out{};
  for (const Complex& p : partial) out += p;
  return out;
}

Complex marginalize_kernel(HalfInt j, const TomographyPoint& x2, const TomographyPoint& x1,
                           const QuadratureGrid& grid) {
  if (grid.j != j) throw std::invalid_argument("marginalize_kernel: grid j mismatch");
  const SLBasis basis = sl_basis(j);
  const ComplexMatrix d2u1 = multiply(quantizer(j, x2, basis), dequantizer(j, x1, basis));
  const std::vector<ComplexMatrix> quantizers = grid_operators(grid, basis, true);
  const std::size_t angles = grid.angle_count();

  const int workers = thread_count();
  std::vector<Complex> partial(workers, Complex{});
  parallel_chunks(quantizers.size(), [&](int chunk, std::size_t begin, std::size_t end) {
    Complex acc{};
    for (std::size_t i3 = begin; i3 < end; ++i3)
      acc += grid.weight_at(i3 % angles) * trace_product(quantizers[i3], d2u1);
    partial[chunk] = acc;
  });
  Complex out{};
  for (const Complex& p : partial) out += p;
  return out;
}

}  // namespace spintomo
