// tomo: spin-tomography command line tool.
//
// Subcommands: tomogram, reconstruct, kernel, verify, figure.
// Exit codes: 0 success, 1 verification/numeric failure, 2 usage/IO error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spintomo/checks.hpp"
#include "spintomo/kernels.hpp"
#include "spintomo/tomography.hpp"

namespace {

using namespace spintomo;

constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;
constexpr double kPi = 3.14159265358979323846;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

HalfInt parse_j(int twice_j, int max_twice_j) {
  if (twice_j < 0) throw std::runtime_error("--j must be a nonnegative doubled spin");
  if (twice_j > max_twice_j)
    throw std::runtime_error("--j " + std::to_string(twice_j) + " exceeds the supported maximum " +
                             std::to_string(max_twice_j) + " for this command");
  return HalfInt::from_twice(twice_j);
}

int cmd_tomogram(int twice_j, const std::string& in_path, const std::string& out_path,
                 int oversample) {
  const HalfInt j = parse_j(twice_j, 11);
  const ComplexMatrix m = matrix_from_json(read_file(in_path));
  if (m.dim() != dimension(j))
    throw std::runtime_error("density matrix dimension " + std::to_string(m.dim()) +
                             " does not match 2j+1 = " + std::to_string(dimension(j)));
  const DensityMatrix rho(m);

  const QuadratureGrid grid = make_grid(j, oversample);
  const Tomogram w = sample_tomogram(rho, grid);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  write_tomogram_csv(out, w);

  const TomogramDiagnostics d = tomogram_diagnostics(w);
  std::printf("wrote %zu rows to %s\n", w.values.size(), out_path.c_str());
  std::printf("normalization sum_m w = 1:    max deviation %.3e\n", d.max_m_sum_deviation);
  std::printf("normalization int w dx = 1:   deviation %.3e\n", d.integral_deviation);
  std::printf("value range: [%.6g, %.6g]\n", d.min_value, d.max_value);
  return 0;
}

int cmd_reconstruct(int twice_j, const std::string& in_path, const std::string& out_path) {
  const HalfInt j = parse_j(twice_j, 11);
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + in_path);
  const std::vector<TomogramSample> samples = read_tomogram_csv(in);

  std::optional<DensityMatrix> rho;
  try {
    rho.emplace(reconstruct_from_samples(j, samples));
  } catch (const std::runtime_error& e) {
    // density invariants violated: numeric failure, not a usage error
    std::fprintf(stderr, "reconstruction failed: %s\n", e.what());
    return kExitNumeric;
  }
  write_file(out_path, matrix_to_json(rho->matrix()));
  const DensityDiagnostics d = density_diagnostics(rho->matrix());
  std::printf("wrote density matrix to %s\n", out_path.c_str());
  std::printf("residuals: hermiticity %.3e, trace %.3e, min eigenvalue %.3e\n",
              d.hermiticity_residual, d.trace_deviation, d.min_eigenvalue);
  return 0;
}

TomographyPoint point_from_json(const nlohmann::json& node, HalfInt j) {
  if (!node.contains("two_m") || !node.contains("alpha") || !node.contains("beta") ||
      !node.contains("gamma"))
    throw std::runtime_error("kernel point needs fields two_m, alpha, beta, gamma");
  const HalfInt m = HalfInt::from_twice(node["two_m"].get<int>());
  if (!valid_jm(j, m))
    throw std::runtime_error("kernel point two_m=" + std::to_string(m.twice()) +
                             " is not a projection of the requested j");
  return {m, EulerAngles(node["alpha"].get<double>(), node["beta"].get<double>(),
                         node["gamma"].get<double>())};
}

int cmd_kernel(int twice_j, const std::string& kernel, const std::string& form,
               const std::string& in_path, const std::string& out_path) {
  const HalfInt j = parse_j(twice_j, 11);
  const bool closed = form == "closed";
  if (closed && twice_j != 1 && twice_j != 2)
    throw std::runtime_error("closed forms exist for spin 1/2 and spin 1 only (--j 1 or 2)");

  nlohmann::json points;
  try {
    points = nlohmann::json::parse(read_file(in_path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("cannot parse points file: ") + e.what());
  }
  if (!points.is_array()) throw std::runtime_error("points file must hold a JSON array");

  const SLBasis basis = sl_basis(j);
  const bool qubit = twice_j == 1;
  std::ostringstream out;
  out << "index,re,im\n";
  char line[128];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const nlohmann::json& entry = points[i];
    Complex value;
    if (kernel == "delta") {
      const TomographyPoint x2 = point_from_json(entry.at("x2"), j);
      const TomographyPoint x1 = point_from_json(entry.at("x1"), j);
      if (closed) {
        value = qubit ? delta_kernel_qubit(x2.m.value(), axis_vector(x2.angles), x1.m.value(),
                                           axis_vector(x1.angles))
                      : delta_kernel_qutrit(x2.m.value(), axis_vector(x2.angles), x1.m.value(),
                                            axis_vector(x1.angles));
      } else {
        value = delta_kernel_numeric(j, x2, x1, basis);
      }
    } else {
      const TomographyPoint x3 = point_from_json(entry.at("x3"), j);
      const TomographyPoint x2 = point_from_json(entry.at("x2"), j);
      const TomographyPoint x1 = point_from_json(entry.at("x1"), j);
      if (kernel == "star") {
        if (closed)
          value = qubit ? star_kernel_qubit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                                            axis_vector(x2.angles), x1.m.value(),
                                            axis_vector(x1.angles))
                        : star_kernel_qutrit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                                             axis_vector(x2.angles), x1.m.value(),
                                             axis_vector(x1.angles));
        else
          value = star_kernel_numeric(j, x3, x2, x1, basis);
      } else {
        if (closed)
          value = qubit ? dual_kernel_qubit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                                            axis_vector(x2.angles), x1.m.value(),
                                            axis_vector(x1.angles))
                        : dual_kernel_qutrit(x3.m.value(), axis_vector(x3.angles), x2.m.value(),
                                             axis_vector(x2.angles), x1.m.value(),
                                             axis_vector(x1.angles));
        else
          value = dual_kernel_numeric(j, x3, x2, x1, basis);
      }
    }
    std::snprintf(line, sizeof(line), "%zu,%.17g,%.17g\n", i, value.real(), value.imag());
    out << line;
  }
  write_file(out_path, out.str());
  std::printf("evaluated %zu %s-kernel values (%s form) to %s\n", points.size(), kernel.c_str(),
              closed ? "closed" : "numeric", out_path.c_str());
  return 0;
}

int cmd_verify(std::uint64_t seed, int oversample, double tol, double perturb,
               const std::string& out_path) {
  CheckOptions opts;
  opts.seed = seed;
  opts.oversample = oversample;
  opts.tolerance_override = tol;
  opts.quantizer_scale = perturb;
  const std::vector<CheckResult> results = run_all_checks(opts);
  const std::string report = checks_report_json(results, opts);
  if (out_path.empty()) {
    std::cout << report << "\n";
  } else {
    write_file(out_path, report);
  }
  for (const CheckResult& r : results) {
    const char* status = r.pass ? "pass" : (r.attainable ? "FAIL" : "FAIL (known gap)");
    std::fprintf(stderr, "%-42s %-16s observed %.3e  tol %.3e  (%.2fs)\n", r.name.c_str(), status,
                 r.observed, r.tolerance, r.seconds);
  }
  // Exit reflects the attainable identities; the two pointwise quantizer-form
  // gaps are intrinsic and always reported in the JSON.
  return attainable_passed(results) ? 0 : kExitNumeric;
}

int cmd_figure(int twice_j, const std::string& out_dir, int beta_points) {
  const HalfInt j = parse_j(twice_j, 100);  // up to 101-dimensional
  if (beta_points < 2) throw std::runtime_error("--beta-points must be at least 2");
  std::filesystem::create_directories(out_dir);

  // mu = j, ~j/2 and the smallest projection with j - mu integral
  int tmu_half = twice_j / 2;
  if ((twice_j - tmu_half) % 2 != 0) ++tmu_half;
  const int mu_list[3] = {twice_j, tmu_half, twice_j % 2};

  double worst_slice = 0.0;
  for (const int tmu : mu_list) {
    const HalfInt mu = HalfInt::from_twice(tmu);
    std::ostringstream csv;
    csv << "two_m,beta,exact,asymptotic\n";
    char line[160];
    for (int bi = 0; bi < beta_points; ++bi) {
      const double beta = kPi * bi / (beta_points - 1);
      const bool interior = bi > 0 && bi + 1 < beta_points;
      double slice_sum = 0.0;
      for (int idx = 0; idx < dimension(j); ++idx) {
        const HalfInt m = m_from_index(j, idx);
        const double exact = pure_state_tomogram(j, mu, m, beta);
        if (!std::isfinite(exact)) {
          std::fprintf(stderr, "non-finite tomogram value at mu=%d/2, beta=%g\n", tmu, beta);
          return kExitNumeric;
        }
        slice_sum += exact;
        const double asym =
            interior ? asymptotic_tomogram(j, mu, m.value(), beta) : std::nan("");
        std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g\n", m.twice(), beta, exact, asym);
        csv << line;
      }
      worst_slice = std::max(worst_slice, std::abs(slice_sum - 1.0));
    }
    const std::string path =
        (std::filesystem::path(out_dir) /
         ("figure_j" + std::to_string(twice_j) + "_mu" + std::to_string(tmu) + ".csv"))
            .string();
    write_file(path, csv.str());
    std::printf("wrote %s\n", path.c_str());
  }
  std::printf("max |sum_m w - 1| over beta slices: %.3e\n", worst_slice);
  return worst_slice <= 1e-9 ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin (qudit) tomography: tomograms, reconstruction, star-product kernels"};
  app.require_subcommand(1);

  int twice_j = -1;
  std::string in_path, out_path;
  int oversample = 1;
  std::uint64_t seed = 1;
  double tol = 0.0;
  double perturb = 1.0;
  std::string kernel = "delta";
  std::string form = "numeric";
  int beta_points = 181;

  CLI::App* tomogram = app.add_subcommand("tomogram", "sample the tomogram of a density matrix");
  tomogram->add_option("--j", twice_j, "doubled spin (1 means spin 1/2)")->required();
  tomogram->add_option("--in", in_path, "density matrix JSON")->required();
  tomogram->add_option("--out", out_path, "tomogram CSV")->required();
  tomogram->add_option("--oversample", oversample, "quadrature oversampling factor");

  CLI::App* reconstruct = app.add_subcommand("reconstruct", "density matrix from a tomogram CSV");
  reconstruct->add_option("--j", twice_j, "doubled spin")->required();
  reconstruct->add_option("--in", in_path, "tomogram CSV")->required();
  reconstruct->add_option("--out", out_path, "density matrix JSON")->required();

  CLI::App* kernel_cmd = app.add_subcommand("kernel", "evaluate star-product kernels at points");
  kernel_cmd->add_option("--j", twice_j, "doubled spin")->required();
  kernel_cmd->add_option("--kernel", kernel, "delta|star|dual")
      ->check(CLI::IsMember({"delta", "star", "dual"}));
  kernel_cmd->add_option("--form", form, "numeric|closed")
      ->check(CLI::IsMember({"numeric", "closed"}));
  kernel_cmd->add_option("--in", in_path, "JSON list of evaluation points")->required();
  kernel_cmd->add_option("--out", out_path, "CSV of kernel values")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--seed", seed, "seed for the randomized checks");
  verify->add_option("--oversample", oversample, "quadrature oversampling factor");
  verify->add_option("--tol", tol, "override every check tolerance");
  verify->add_option("--out", out_path, "write the JSON report here (default stdout)");
  verify->add_option("--perturb-quantizer", perturb,
                     "scale the quantizer in reconstruction integrals (sensitivity self-test)");

  CLI::App* figure = app.add_subcommand("figure", "emit pure-state tomogram surfaces w(m, beta)");
  figure->add_option("--j", twice_j, "doubled spin (default 100, spin 50)");
  figure->add_option("--out", out_path, "output directory")->required();
  figure->add_option("--beta-points", beta_points, "number of beta samples on [0, pi]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (tomogram->parsed()) return cmd_tomogram(twice_j, in_path, out_path, oversample);
    if (reconstruct->parsed()) return cmd_reconstruct(twice_j, in_path, out_path);
    if (kernel_cmd->parsed()) return cmd_kernel(twice_j, kernel, form, in_path, out_path);
    if (verify->parsed()) return cmd_verify(seed, oversample, tol, perturb, out_path);
    if (figure->parsed()) return cmd_figure(twice_j < 0 ? 100 : twice_j, out_path, beta_points);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
