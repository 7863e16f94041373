#include "spintomo/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "spintomo/kernels.hpp"
#include "spintomo/tomography.hpp"

namespace spintomo {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct RandomSource {
  explicit RandomSource(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine);
  }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine); }

  EulerAngles angles() {
    return EulerAngles(uniform(0.0, 2.0 * kPi), std::acos(uniform(-1.0, 1.0)),
                       uniform(0.0, 2.0 * kPi));
  }

  HalfInt projection(HalfInt j) {
    const int idx = static_cast<int>(engine() % static_cast<std::uint64_t>(dimension(j)));
    return m_from_index(j, idx);
  }

  TomographyPoint point(HalfInt j) { return {projection(j), angles()}; }

  ComplexMatrix hermitian(int dim) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) g(r, c) = Complex(gaussian(), gaussian());
    return scale(0.5, add(g, adjoint(g)));
  }

  DensityMatrix density(int dim) {
    // Ginibre construction: G G^dag normalized to unit trace.
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) g(r, c) = Complex(gaussian(), gaussian());
    ComplexMatrix rho = multiply(g, adjoint(g));
    rho = scale(1.0 / trace(rho).real(), rho);
    return DensityMatrix(rho);
  }

  std::mt19937_64 engine;
};

struct Harness {
  explicit Harness(const CheckOptions& opts) : options(opts) {}

  template <typename Fn>
  void run(const std::string& name, int criterion, double tolerance, Fn&& fn,
           bool attainable = true, std::string note = {}) {
    CheckResult r;
    r.name = name;
    r.criterion = criterion;
    r.attainable = attainable;
    r.note = std::move(note);
    r.tolerance = options.tolerance_override > 0.0 ? options.tolerance_override : tolerance;
    const auto t0 = std::chrono::steady_clock::now();
    RandomSource rng(options.seed * 1000003ull + results.size() + 1);
    r.observed = fn(rng);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = std::isfinite(r.observed) && r.observed <= r.tolerance;
    results.push_back(std::move(r));
  }

  CheckOptions options;
  std::vector<CheckResult> results;
};

}  // namespace

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
  Harness h(options);
  const double dscale = options.quantizer_scale;

  // --- criterion 1: tomogram -> reconstruction round trip -----------------
  h.run("roundtrip_reconstruction", 1, 1e-10, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 5; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const QuadratureGrid grid = make_grid(j, h.options.oversample);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = rng.density(dimension(j));
        const Tomogram w = sample_tomogram(rho, grid);
        std::vector<Complex> symbol(w.values.begin(), w.values.end());
        const ComplexMatrix rec = scale(dscale, integrate_symbol(grid, symbol, basis, true));
        worst = std::max(worst, frobenius_norm(subtract(rec, rho.matrix())));
      }
    }
    return worst;
  });

  // --- criterion 2: equivalence of operator forms --------------------------
  h.run("form_equivalence_dequantizer", 2, 1e-12, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 100; ++trial) {
        const TomographyPoint x = rng.point(j);
        const ComplexMatrix a = dequantizer(j, x, basis);
        worst = std::max(worst, max_abs_diff(a, dequantizer_exponential(j, x)));
        worst = std::max(worst, max_abs_diff(a, dequantizer_from_tensor_operators(j, x)));
      }
    }
    return worst;
  });
  h.run("form_equivalence_quantizer_tensor", 2, 1e-12, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 100; ++trial) {
        const TomographyPoint x = rng.point(j);
        worst = std::max(worst, max_abs_diff(quantizer(j, x, basis),
                                             quantizer_from_tensor_operators(j, x)));
      }
    }
    return worst;
  });
  // The next two identities are claimed pointwise but hold only for spin 1/2;
  // for j >= 1 the phase-integral quantizer differs from the tensor-form one
  // (they agree under every integral against symbols). Kept as stated so the
  // report shows the true gap.
  const std::string gap_note =
      "pointwise gap is intrinsic for j >= 1: the phase-integral quantizer is Toeplitz in "
      "m - m' while the tensor-form one is not; both reconstruct states exactly";
  h.run("form_equivalence_quantizer_exponential", 2, 1e-12, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 100; ++trial) {
        const TomographyPoint x = rng.point(j);
        worst = std::max(worst,
                         max_abs_diff(quantizer(j, x, basis), quantizer_exponential(j, x)));
      }
    }
    return worst;
  }, /*attainable=*/false, gap_note);
  h.run("shift_bridge_vs_tensor_quantizer", 2, 1e-8, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 100; ++trial) {
        const TomographyPoint x = rng.point(j);
        worst = std::max(worst, max_abs_diff(quantizer(j, x, basis),
                                             quantizer_from_dequantizer(j, x, basis)));
      }
    }
    return worst;
  }, /*attainable=*/false, gap_note);
  h.run("inverse_series_dequantizer", 2, 1e-8, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 100; ++trial) {
        const TomographyPoint x = rng.point(j);
        worst = std::max(worst, max_abs_diff(dequantizer(j, x, basis),
                                             dequantizer_from_quantizer(j, x, basis, 1e-10)));
      }
    }
    return worst;
  });
  h.run("shift_bridge_equals_exponential", 0, 1e-11, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 50; ++trial) {
        const TomographyPoint x = rng.point(j);
        worst = std::max(worst, max_abs_diff(quantizer_exponential(j, x),
                                             quantizer_from_dequantizer(j, x, basis)));
      }
    }
    return worst;
  });
  h.run("phase_integral_quantizer_reconstructs", 0, 1e-10, [&](RandomSource& rng) {
    // Weak equivalence: the phase-integral quantizer also inverts the
    // tomogram map even where it differs pointwise from the tensor form.
    double worst = 0.0;
    for (int tj = 1; tj <= 3; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const QuadratureGrid grid = make_grid(j, h.options.oversample);
      const SLBasis basis = sl_basis(j);
      const DensityMatrix rho = rng.density(dimension(j));
      const Tomogram w = sample_tomogram(rho, grid);
      ComplexMatrix acc(dimension(j));
      const std::size_t angles = grid.angle_count();
      for (std::size_t idx = 0; idx < angles; ++idx) {
        for (int mi = 0; mi < dimension(j); ++mi) {
          const TomographyPoint x{m_from_index(j, mi), grid.angles_at(idx)};
          acc = add(acc, scale(w.at(mi, idx) * grid.weight_at(idx),
                               quantizer_from_dequantizer(j, x, basis)));
        }
      }
      worst = std::max(worst, frobenius_norm(subtract(acc, rho.matrix())));
    }
    return worst;
  });

  // --- criterion 3: closed-form kernels vs trace forms ---------------------
  h.run("closed_delta_qubit", 3, 1e-12, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(1);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const TomographyPoint x2 = rng.point(j), x1 = rng.point(j);
      const Complex num = delta_kernel_numeric(j, x2, x1, basis);
      const double closed = delta_kernel_qubit(x2.m.value(), axis_vector(x2.angles),
                                               x1.m.value(), axis_vector(x1.angles));
      worst = std::max(worst, std::abs(num - Complex(closed, 0.0)));
    }
    return worst;
  });
  h.run("closed_delta_qutrit", 3, 1e-12, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(2);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const TomographyPoint x2 = rng.point(j), x1 = rng.point(j);
      const Complex num = delta_kernel_numeric(j, x2, x1, basis);
      const double closed = delta_kernel_qutrit(x2.m.value(), axis_vector(x2.angles),
                                                x1.m.value(), axis_vector(x1.angles));
      worst = std::max(worst, std::abs(num - Complex(closed, 0.0)));
    }
    return worst;
  });
  h.run("closed_star_qubit", 3, 1e-12, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(1);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const TomographyPoint x3 = rng.point(j), x2 = rng.point(j), x1 = rng.point(j);
      const Complex num = star_kernel_numeric(j, x3, x2, x1, basis);
      const Complex closed =
          star_kernel_qubit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                            axis_vector(x2.angles), x1.m.value(), axis_vector(x1.angles));
      worst = std::max(worst, std::abs(num - closed));
    }
    return worst;
  });
  h.run("closed_star_qutrit", 3, 1e-12, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(2);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const TomographyPoint x3 = rng.point(j), x2 = rng.point(j), x1 = rng.point(j);
      const Complex num = star_kernel_numeric(j, x3, x2, x1, basis);
      const Complex closed =
          star_kernel_qutrit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                             axis_vector(x2.angles), x1.m.value(), axis_vector(x1.angles));
      worst = std::max(worst, std::abs(num - closed));
    }
    return worst;
  });
  h.run("closed_dual_qubit", 3, 1e-12, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(1);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const TomographyPoint x3 = rng.point(j), x2 = rng.point(j), x1 = rng.point(j);
      const Complex num = dual_kernel_numeric(j, x3, x2, x1, basis);
      const Complex closed =
          dual_kernel_qubit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                            axis_vector(x2.angles), x1.m.value(), axis_vector(x1.angles));
      worst = std::max(worst, std::abs(num - closed));
    }
    return worst;
  });
  h.run("closed_dual_qutrit", 3, 1e-12, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(2);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const TomographyPoint x3 = rng.point(j), x2 = rng.point(j), x1 = rng.point(j);
      const Complex num = dual_kernel_numeric(j, x3, x2, x1, basis);
      const Complex closed =
          dual_kernel_qutrit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                             axis_vector(x2.angles), x1.m.value(), axis_vector(x1.angles));
      worst = std::max(worst, std::abs(num - closed));
    }
    return worst;
  });

  // --- criterion 4: kernel marginalization ---------------------------------
  h.run("marginalization_qubit", 4, 1e-10, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(1);
    const QuadratureGrid grid = make_grid(j, h.options.oversample);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const TomographyPoint x2 = rng.point(j), x1 = rng.point(j);
      const Complex lhs = marginalize_kernel(j, x2, x1, grid);
      const Complex rhs = delta_kernel_numeric(j, x2, x1, basis);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
  });
  h.run("marginalization_qutrit", 4, 1e-10, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(2);
    const QuadratureGrid grid = make_grid(j, h.options.oversample);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const TomographyPoint x2 = rng.point(j), x1 = rng.point(j);
      const Complex lhs = marginalize_kernel(j, x2, x1, grid);
      const Complex rhs = delta_kernel_numeric(j, x2, x1, basis);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
  });

  // --- criterion 5: star product through the kernel ------------------------
  h.run("star_product_trace", 5, 1e-9, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(1);
    const QuadratureGrid grid = make_grid(j, h.options.oversample);
    const SLBasis basis = sl_basis(j);
    double worst = 0.0;
    for (int pair = 0; pair < 3; ++pair) {
      const ComplexMatrix a = rng.hermitian(2), b = rng.hermitian(2);
      const std::vector<Complex> fa = sample_symbol(a, grid), fb = sample_symbol(b, grid);
      const ComplexMatrix ab = multiply(a, b);
      for (int trial = 0; trial < 20; ++trial) {
        const TomographyPoint x1 = rng.point(j);
        const Complex direct = trace(multiply(ab, dequantizer(j, x1, basis)));
        worst = std::max(worst, std::abs(star_product(grid, fa, fb, x1) - direct));
      }
    }
    return worst;
  });
  h.run("star_product_associativity", 5, 1e-8, [&](RandomSource& rng) {
    const HalfInt j = HalfInt::from_twice(1);
    const QuadratureGrid grid = make_grid(j, h.options.oversample);
    const ComplexMatrix a = rng.hermitian(2), b = rng.hermitian(2), c = rng.hermitian(2);
    const std::vector<Complex> fa = sample_symbol(a, grid), fb = sample_symbol(b, grid),
                               fc = sample_symbol(c, grid);
    // (fA * fB) and (fB * fC) as symbol sample sets over the grid
    const std::size_t angles = grid.angle_count();
    std::vector<Complex> fab(grid.point_count()), fbc(grid.point_count());
    for (std::size_t i = 0; i < grid.point_count(); ++i) {
      const TomographyPoint x{m_from_index(j, static_cast<int>(i / angles)),
                              grid.angles_at(i % angles)};
      fab[i] = star_product(grid, fa, fb, x);
      fbc[i] = star_product(grid, fb, fc, x);
    }
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const TomographyPoint x1 = rng.point(j);
      const Complex left = star_product(grid, fab, fc, x1);
      const Complex right = star_product(grid, fa, fbc, x1);
      worst = std::max(worst, std::abs(left - right));
    }
    return worst;
  });

  // --- criterion 6: dual-symbol pairing ------------------------------------
  h.run("dual_pairing", 6, 1e-10, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 4; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const QuadratureGrid grid = make_grid(j, h.options.oversample);
      const SLBasis basis = sl_basis(j);
      for (int pair = 0; pair < 5; ++pair) {
        const ComplexMatrix a = rng.hermitian(dimension(j)), b = rng.hermitian(dimension(j));
        const std::vector<Complex> fa = sample_symbol(a, grid);
        std::vector<Complex> fb = sample_dual_symbol(b, grid, basis);
        for (Complex& v : fb) v *= dscale;
        Complex integral{};
        const std::size_t npts = grid.point_count();
        for (std::size_t i = 0; i < npts; ++i)
          integral += fa[i] * fb[i] * grid.weight_at(i % grid.angle_count());
        worst = std::max(worst, std::abs(integral - trace(multiply(a, b))));
      }
    }
    return worst;
  });

  // --- criterion 7: golden values ------------------------------------------
  h.run("golden_sl_forms", 7, 1e-12, [&](RandomSource&) {
    double worst = 0.0;
    for (int tj = 1; tj <= 5; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      const ComplexMatrix jz = jz_matrix(j);
      const ComplexMatrix eye = ComplexMatrix::identity(dimension(j));
      const double jj1 = j.value() * (j.value() + 1.0);
      worst = std::max(worst, max_abs_diff(basis.ops[0], eye));
      worst = std::max(worst, max_abs_diff(basis.ops[1], jz));
      if (tj >= 2) {
        const ComplexMatrix s2 = subtract(scale(3.0, multiply(jz, jz)), scale(jj1, eye));
        worst = std::max(worst, max_abs_diff(basis.ops[2], s2));
      }
      if (tj >= 3) {
        const ComplexMatrix s3 = subtract(scale(5.0, multiply(multiply(jz, jz), jz)),
                                          scale(3.0 * jj1 - 1.0, jz));
        worst = std::max(worst, max_abs_diff(basis.ops[3], s3));
      }
    }
    // explicit spin-1 matrix
    {
      const SLBasis basis = sl_basis(HalfInt::whole(1));
      ComplexMatrix s2(3);
      s2(0, 0) = 1.0;
      s2(1, 1) = -2.0;
      s2(2, 2) = 1.0;
      worst = std::max(worst, max_abs_diff(basis.ops[2], s2));
    }
    return worst;
  });

  h.run("golden_projector_decompositions", 7, 1e-12, [&](RandomSource&) {
    double worst = 0.0;
    // spin 1/2: 1/2 I + 2m J_z
    {
      const HalfInt j = HalfInt::from_twice(1);
      const ComplexMatrix jz = jz_matrix(j);
      const ComplexMatrix eye = ComplexMatrix::identity(2);
      for (int tm = -1; tm <= 1; tm += 2) {
        const double m = 0.5 * tm;
        const ComplexMatrix expect = add(scale(0.5, eye), scale(2.0 * m, jz));
        worst = std::max(worst, max_abs_diff(projector(j, HalfInt::from_twice(tm)), expect));
      }
    }
    // spin 1: 1/3 I + m/2 J_z + (3m^2-2)/6 (3J_z^2 - 2I)
    {
      const HalfInt j = HalfInt::whole(1);
      const ComplexMatrix jz = jz_matrix(j);
      const ComplexMatrix eye = ComplexMatrix::identity(3);
      const ComplexMatrix q = subtract(scale(3.0, multiply(jz, jz)), scale(2.0, eye));
      for (int mi = -1; mi <= 1; ++mi) {
        const double m = mi;
        ComplexMatrix expect = add(scale(1.0 / 3.0, eye), scale(0.5 * m, jz));
        expect = add(expect, scale((3.0 * m * m - 2.0) / 6.0, q));
        worst = std::max(worst, max_abs_diff(projector(j, HalfInt::whole(mi)), expect));
      }
    }
    // spin 3/2: 1/4 I + m/5 J_z + (4m^2-5)/64 (4J_z^2-5I) + (20m^3-41m)/720 (20J_z^3-41J_z)
    {
      const HalfInt j = HalfInt::from_twice(3);
      const ComplexMatrix jz = jz_matrix(j);
      const ComplexMatrix jz2 = multiply(jz, jz);
      const ComplexMatrix jz3 = multiply(jz2, jz);
      const ComplexMatrix eye = ComplexMatrix::identity(4);
      const ComplexMatrix q2 = subtract(scale(4.0, jz2), scale(5.0, eye));
      const ComplexMatrix q3 = subtract(scale(20.0, jz3), scale(41.0, jz));
      for (int tm = -3; tm <= 3; tm += 2) {
        const double m = 0.5 * tm;
        ComplexMatrix expect = add(scale(0.25, eye), scale(m / 5.0, jz));
        expect = add(expect, scale((4.0 * m * m - 5.0) / 64.0, q2));
        expect = add(expect, scale((20.0 * m * m * m - 41.0 * m) / 720.0, q3));
        worst = std::max(worst, max_abs_diff(projector(j, HalfInt::from_twice(tm)), expect));
      }
    }
    return worst;
  });

  h.run("golden_dequantizer_matrices", 7, 1e-12, [&](RandomSource& rng) {
    double worst = 0.0;
    // explicit spin-1/2 dequantizer/quantizer matrices
    {
      const HalfInt j = HalfInt::from_twice(1);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 25; ++trial) {
        const TomographyPoint x = rng.point(j);
        const double m = x.m.value(), al = x.angles.alpha, be = x.angles.beta;
        ComplexMatrix mterm(2);
        mterm(0, 0) = std::cos(be);
        mterm(0, 1) = -std::polar(std::sin(be), al);
        mterm(1, 0) = -std::polar(std::sin(be), -al);
        mterm(1, 1) = -std::cos(be);
        const ComplexMatrix eye = ComplexMatrix::identity(2);
        worst = std::max(worst, max_abs_diff(dequantizer(j, x, basis),
                                             add(scale(0.5, eye), scale(m, mterm))));
        worst = std::max(worst, max_abs_diff(quantizer(j, x, basis),
                                             add(scale(0.5, eye), scale(3.0 * m, mterm))));
      }
    }
    // explicit spin-1 dequantizer/quantizer matrices
    {
      const HalfInt j = HalfInt::whole(1);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 25; ++trial) {
        const TomographyPoint x = rng.point(j);
        const double m = x.m.value(), al = x.angles.alpha, be = x.angles.beta;
        const double sb = std::sin(be), cb = std::cos(be);
        const Complex eia = std::polar(1.0, al);
        const Complex e2ia = std::polar(1.0, 2.0 * al);
        ComplexMatrix t1(3);
        t1(0, 0) = cb;
        t1(0, 1) = -sb / std::sqrt(2.0) * eia;
        t1(1, 0) = -sb / std::sqrt(2.0) * std::conj(eia);
        t1(1, 2) = -sb / std::sqrt(2.0) * eia;
        t1(2, 1) = -sb / std::sqrt(2.0) * std::conj(eia);
        t1(2, 2) = -cb;
        ComplexMatrix t2(3);
        t2(0, 0) = (3.0 * cb * cb - 1.0) / 2.0;
        t2(0, 1) = -3.0 * cb * sb / std::sqrt(2.0) * eia;
        t2(0, 2) = 3.0 * sb * sb / 2.0 * e2ia;
        t2(1, 0) = -3.0 * cb * sb / std::sqrt(2.0) * std::conj(eia);
        t2(1, 1) = -(3.0 * cb * cb - 1.0);
        t2(1, 2) = 3.0 * cb * sb / std::sqrt(2.0) * eia;
        t2(2, 0) = 3.0 * sb * sb / 2.0 * std::conj(e2ia);
        t2(2, 1) = 3.0 * cb * sb / std::sqrt(2.0) * std::conj(eia);
        t2(2, 2) = (3.0 * cb * cb - 1.0) / 2.0;
        const ComplexMatrix eye = ComplexMatrix::identity(3);
        ComplexMatrix expect_u = add(scale(1.0 / 3.0, eye), scale(0.5 * m, t1));
        expect_u = add(expect_u, scale((3.0 * m * m - 2.0) / 6.0, t2));
        ComplexMatrix expect_d = add(scale(1.0 / 3.0, eye), scale(3.0 * 0.5 * m, t1));
        expect_d = add(expect_d, scale(5.0 * (3.0 * m * m - 2.0) / 6.0, t2));
        worst = std::max(worst, max_abs_diff(dequantizer(j, x, basis), expect_u));
        worst = std::max(worst, max_abs_diff(quantizer(j, x, basis), expect_d));
      }
    }
    return worst;
  });

  // --- criterion 8: large-spin tomogram surfaces ----------------------------
  h.run("figure_slice_normalization", 8, 1e-9, [&](RandomSource&) {
    const HalfInt j = HalfInt::whole(50);
    double worst = 0.0;
    for (int tmu : {100, 50, 0}) {
      const HalfInt mu = HalfInt::from_twice(tmu);
      for (int bi = 0; bi < 181; ++bi) {
        const double beta = kPi * bi / 180.0;
        double sum = 0.0;
        for (int idx = 0; idx < dimension(j); ++idx) {
          const double w = pure_state_tomogram(j, mu, m_from_index(j, idx), beta);
          if (!std::isfinite(w)) return std::numeric_limits<double>::infinity();
          sum += w;
        }
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
    return worst;
  });
  h.run("figure_asymptotic_argmax", 8, 1.0, [&](RandomSource&) {
    const HalfInt j = HalfInt::whole(50);
    const HalfInt mu = HalfInt::whole(50);
    const double beta = kPi / 3.0;
    int argmax_exact = -50, argmax_asym = -50;
    double best_exact = -1.0, best_asym = -1.0;
    for (int mi = -50; mi <= 50; ++mi) {
      const double exact = pure_state_tomogram(j, mu, HalfInt::whole(mi), beta);
      const double asym = asymptotic_tomogram(j, mu, mi, beta);
      if (exact > best_exact) {
        best_exact = exact;
        argmax_exact = mi;
      }
      if (asym > best_asym) {
        best_asym = asym;
        argmax_asym = mi;
      }
    }
    return static_cast<double>(std::abs(argmax_exact - argmax_asym));
  });

  // --- supplementary invariants --------------------------------------------
  h.run("biorthogonality", 0, 1e-10, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 4; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const QuadratureGrid grid = make_grid(j, h.options.oversample);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 4; ++trial) {
        const ComplexMatrix a = rng.hermitian(dimension(j));
        const std::vector<Complex> fa = sample_symbol(a, grid);
        const ComplexMatrix rec = scale(dscale, integrate_symbol(grid, fa, basis, true));
        worst = std::max(worst, max_abs_diff(rec, a));
      }
    }
    return worst;
  });
  h.run("kernel_reproduction", 0, 1e-10, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 5; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const QuadratureGrid grid = make_grid(j, h.options.oversample);
      const SLBasis basis = sl_basis(j);
      const DensityMatrix rho = rng.density(dimension(j));
      const Tomogram w = sample_tomogram(rho, grid);
      const std::vector<ComplexMatrix> quantizers = grid_operators(grid, basis, true);
      for (int trial = 0; trial < 5; ++trial) {
        const TomographyPoint x1 = rng.point(j);
        const ComplexMatrix u1 = dequantizer(j, x1, basis);
        Complex integral{};
        for (std::size_t i = 0; i < quantizers.size(); ++i)
          integral += w.values[i] * grid.weight_at(i % grid.angle_count()) *
                      trace(multiply(quantizers[i], u1));
        worst = std::max(worst, std::abs(integral - Complex(tomogram_value(rho, x1), 0.0)));
      }
    }
    return worst;
  });
  h.run("tomogram_normalization", 0, 1e-10, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj = 1; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const QuadratureGrid grid = make_grid(j, h.options.oversample);
      const DensityMatrix rho = rng.density(dimension(j));
      const Tomogram w = sample_tomogram(rho, grid);
      const TomogramDiagnostics d = tomogram_diagnostics(w);
      worst = std::max({worst, d.max_m_sum_deviation, d.integral_deviation,
                        std::max(0.0, -d.min_value), std::max(0.0, d.max_value - 1.0)});
    }
    return worst;
  });
  h.run("gamma_insensitivity", 0, 1e-12, [&](RandomSource& rng) {
    double worst = 0.0;
    for (int tj : {1, 2}) {
      const HalfInt j = HalfInt::from_twice(tj);
      const SLBasis basis = sl_basis(j);
      for (int trial = 0; trial < 20; ++trial) {
        TomographyPoint x3 = rng.point(j), x2 = rng.point(j), x1 = rng.point(j);
        const Complex k0 = star_kernel_numeric(j, x3, x2, x1, basis);
        x3.angles = EulerAngles(x3.angles.alpha, x3.angles.beta, rng.uniform(0.0, 2.0 * kPi));
        x2.angles = EulerAngles(x2.angles.alpha, x2.angles.beta, rng.uniform(0.0, 2.0 * kPi));
        x1.angles = EulerAngles(x1.angles.alpha, x1.angles.beta, rng.uniform(0.0, 2.0 * kPi));
        worst = std::max(worst, std::abs(star_kernel_numeric(j, x3, x2, x1, basis) - k0));
      }
    }
    return worst;
  });

  return h.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

bool attainable_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (r.attainable && !r.pass) return false;
  return true;
}

std::string checks_report_json(const std::vector<CheckResult>& results,
                               const CheckOptions& options) {
  nlohmann::json report;
  report["seed"] = options.seed;
  report["oversample"] = options.oversample;
  report["quantizer_scale"] = options.quantizer_scale;
  report["all_passed"] = all_passed(results);
  report["attainable_passed"] = attainable_passed(results);
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& r : results) {
    nlohmann::json c;
    c["name"] = r.name;
    c["criterion"] = r.criterion;
    c["tolerance"] = r.tolerance;
    c["observed_error"] = r.observed;
    c["pass"] = r.pass;
    c["attainable"] = r.attainable;
    if (!r.note.empty()) c["note"] = r.note;
    checks.push_back(c);
  }
  report["checks"] = checks;
  return report.dump(2);
}

}  // namespace spintomo
