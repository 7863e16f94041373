// End-to-end tests of the tomo binary. The test harness passes the binary
// location through the TOMO_BIN environment variable.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "spintomo/complex_matrix.hpp"
#include "spintomo/tomography.hpp"

using namespace spintomo;
namespace fs = std::filesystem;

namespace {

std::string tomo_bin() {
  const char* env = std::getenv("TOMO_BIN");
  REQUIRE_MESSAGE(env != nullptr, "TOMO_BIN must point at the tomo binary");
  return env;
}

int run(const std::string& args) {
  const std::string cmd = tomo_bin() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

struct TempDir {
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("tomo_test_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  fs::path path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cli tomogram and reconstruct round trip") {
  TempDir dir;
  std::mt19937_64 eng(71);

  // maximally mixed qubit: every value is 0.5
  {
    const ComplexMatrix rho = scale(0.5, ComplexMatrix::identity(2));
    std::ofstream(dir.file("mixed.json")) << matrix_to_json(rho);
    CHECK(run("tomogram --j 1 --in " + dir.file("mixed.json") + " --out " +
              dir.file("mixed.csv")) == 0);
    std::ifstream csv(dir.file("mixed.csv"));
    const auto samples = read_tomogram_csv(csv);
    CHECK(samples.size() == 2u * 3u * 4u * 4u);  // (2j+1) Nb Na Ng
    for (const auto& s : samples) CHECK(s.value == doctest::Approx(0.5).epsilon(1e-14));
  }

  // pure |1/2,1/2>: cos^2(beta/2) at m=+1/2 and sin^2(beta/2) at m=-1/2
  {
    const ComplexMatrix rho = ComplexMatrix::diagonal({1.0, 0.0});
    std::ofstream(dir.file("up.json")) << matrix_to_json(rho);
    CHECK(run("tomogram --j 1 --in " + dir.file("up.json") + " --out " + dir.file("up.csv")) ==
          0);
    std::ifstream csv(dir.file("up.csv"));
    for (const auto& s : read_tomogram_csv(csv)) {
      const double expect = s.two_m == 1 ? std::pow(std::cos(s.beta / 2), 2)
                                         : std::pow(std::sin(s.beta / 2), 2);
      CHECK(s.value == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  // mixed-state round trip through files at j = 3/2
  {
    const DensityMatrix rho = oracles::random_density(4, eng);
    std::ofstream(dir.file("rho.json")) << matrix_to_json(rho.matrix());
    CHECK(run("tomogram --j 3 --in " + dir.file("rho.json") + " --out " + dir.file("w.csv")) ==
          0);
    CHECK(run("reconstruct --j 3 --in " + dir.file("w.csv") + " --out " +
              dir.file("rec.json")) == 0);
    const ComplexMatrix rec = matrix_from_json(slurp(dir.file("rec.json")));
    CHECK(frobenius_norm(subtract(rec, rho.matrix())) < 1e-10);
  }

  // pure-state fixture round trip
  {
    std::ofstream(dir.file("pure.json"))
        << matrix_to_json(projector(HalfInt::from_twice(2), HalfInt::from_twice(0)));
    CHECK(run("tomogram --j 2 --in " + dir.file("pure.json") + " --out " +
              dir.file("purew.csv")) == 0);
    CHECK(run("reconstruct --j 2 --in " + dir.file("purew.csv") + " --out " +
              dir.file("purerec.json")) == 0);
    const ComplexMatrix rec = matrix_from_json(slurp(dir.file("purerec.json")));
    CHECK(frobenius_norm(subtract(rec, projector(HalfInt::from_twice(2),
                                                 HalfInt::from_twice(0)))) < 1e-10);
  }

  // usage and IO failures exit with 2
  {
    std::ofstream(dir.file("bad.csv")) << "not,a,tomogram\n1,2,3\n";
    CHECK(run("reconstruct --j 1 --in " + dir.file("bad.csv") + " --out " +
              dir.file("nope.json")) == 2);
    std::ofstream(dir.file("badrho.json")) << matrix_to_json(ComplexMatrix::identity(2));
    CHECK(run("tomogram --j 1 --in " + dir.file("badrho.json") + " --out " +
              dir.file("nope.csv")) == 2);
    CHECK(run("tomogram --j 1 --in " + dir.file("missing.json") + " --out " +
              dir.file("nope.csv")) == 2);
    CHECK(run("tomogram --j 99 --in " + dir.file("mixed.json") + " --out " +
              dir.file("nope.csv")) == 2);
    CHECK(run("reconstruct --j 1 --in " + dir.file("mixed.csv") + " --out " +
              (dir.path / "no_such_dir" / "out.json").string()) == 2);
    CHECK(run("bogus-subcommand") == 2);
  }
}

TEST_CASE("cli kernel evaluation") {
  TempDir dir;
  std::mt19937_64 eng(72);
  std::uniform_real_distribution<double> circle(0.0, 2.0 * 3.14159265358979323846);

  // points file: first three triples random, last one coplanar (gamma-free)
  std::ostringstream points;
  points << "[";
  auto emit_point = [&](int two_m, double a, double b, double g) {
    points << "{\"two_m\":" << two_m << ",\"alpha\":" << a << ",\"beta\":" << b
           << ",\"gamma\":" << g << "}";
  };
  for (int i = 0; i < 3; ++i) {
    if (i) points << ",";
    points << "{\"x3\":";
    emit_point((eng() % 2) ? 1 : -1, circle(eng), 1.1, circle(eng));
    points << ",\"x2\":";
    emit_point((eng() % 2) ? 1 : -1, circle(eng), 2.0, circle(eng));
    points << ",\"x1\":";
    emit_point((eng() % 2) ? 1 : -1, circle(eng), 0.4, circle(eng));
    points << "}";
  }
  points << ",{\"x3\":";
  emit_point(1, 0.0, 0.5, 0.1);
  points << ",\"x2\":";
  emit_point(1, 0.0, 1.5, 4.0);
  points << ",\"x1\":";
  emit_point(-1, 0.0, 2.5, 2.2);
  points << "}]";
  std::ofstream(dir.file("points.json")) << points.str();

  CHECK(run("kernel --j 1 --kernel star --form numeric --in " + dir.file("points.json") +
            " --out " + dir.file("numeric.csv")) == 0);
  CHECK(run("kernel --j 1 --kernel star --form closed --in " + dir.file("points.json") +
            " --out " + dir.file("closed.csv")) == 0);

  auto parse = [](const std::string& text) {
    std::vector<std::pair<double, double>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      double idx, re, im;
      REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &idx, &re, &im) == 3);
      rows.emplace_back(re, im);
    }
    return rows;
  };
  const auto numeric = parse(slurp(dir.file("numeric.csv")));
  const auto closed = parse(slurp(dir.file("closed.csv")));
  REQUIRE(numeric.size() == 4);
  REQUIRE(closed.size() == 4);
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    CHECK(numeric[i].first == doctest::Approx(closed[i].first).epsilon(1e-12));
    CHECK(numeric[i].second == doctest::Approx(closed[i].second).epsilon(1e-12));
  }
  // the coplanar fixture is real
  CHECK(std::abs(numeric.back().second) < 1e-13);

  // delta kernel needs only x2, x1
  std::ofstream(dir.file("pair.json"))
      << "[{\"x2\":{\"two_m\":2,\"alpha\":0,\"beta\":0,\"gamma\":0},"
         "\"x1\":{\"two_m\":2,\"alpha\":0,\"beta\":0,\"gamma\":0}}]";
  CHECK(run("kernel --j 2 --kernel delta --form closed --in " + dir.file("pair.json") +
            " --out " + dir.file("delta.csv")) == 0);
  const auto delta = parse(slurp(dir.file("delta.csv")));
  REQUIRE(delta.size() == 1);
  CHECK(delta[0].first == doctest::Approx(8.0 / 3.0).epsilon(1e-14));

  // closed forms exist only for doubled spin 1 and 2
  CHECK(run("kernel --j 3 --kernel star --form closed --in " + dir.file("points.json") +
            " --out " + dir.file("nope.csv")) == 2);
  // invalid m for the requested j
  CHECK(run("kernel --j 2 --kernel star --form numeric --in " + dir.file("points.json") +
            " --out " + dir.file("nope.csv")) == 2);
}

TEST_CASE("cli verify") {
  TempDir dir;
  // default run passes on every attainable identity and writes the report
  CHECK(run("verify --seed 7 --out " + dir.file("report.json")) == 0);
  const std::string report = slurp(dir.file("report.json"));
  CHECK(report.find("\"attainable_passed\": true") != std::string::npos);
  CHECK(report.find("\"name\"") != std::string::npos);
  CHECK(report.find("\"observed_error\"") != std::string::npos);
  CHECK(report.find("\"tolerance\"") != std::string::npos);

  // seed stability: identical bytes for identical seeds
  CHECK(run("verify --seed 7 --out " + dir.file("report2.json")) == 0);
  CHECK(slurp(dir.file("report2.json")) == report);

  // a deliberately scaled quantizer must fail the biorthogonality check
  CHECK(run("verify --seed 7 --perturb-quantizer 1.01 --out " + dir.file("bad.json")) == 1);
  const std::string bad = slurp(dir.file("bad.json"));
  const auto pos = bad.find("\"name\": \"biorthogonality\"");
  REQUIRE(pos != std::string::npos);
  const auto window = bad.substr(pos, 400);
  CHECK(window.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("cli figure") {
  TempDir dir;
  CHECK(run("figure --out " + dir.file("fig") + " --beta-points 61") == 0);
  for (const char* name : {"figure_j100_mu100.csv", "figure_j100_mu50.csv",
                           "figure_j100_mu0.csv"}) {
    const std::string text = slurp((fs::path(dir.file("fig")) / name).string());
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "two_m,beta,exact,asymptotic");
    std::map<double, double> slice_sums;
    std::size_t rows = 0;
    double peak_beta = 0.0, peak_m = 0.0, peak_val = -1.0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      double two_m, beta, exact, asym;
      REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &two_m, &beta, &exact, &asym) == 4);
      CHECK(std::isfinite(exact));
      slice_sums[beta] += exact;
      ++rows;
      // the asymptotic column is finite away from the poles
      if (beta > 0.0 && beta < 3.14159) CHECK(std::isfinite(asym));
      if (std::string(name).find("mu100") != std::string::npos && exact > peak_val) {
        peak_val = exact;
        peak_beta = beta;
        peak_m = two_m / 2.0;
      }
    }
    CHECK(rows == 101u * 61u);
    for (const auto& [beta, sum] : slice_sums) CHECK(std::abs(sum - 1.0) < 1e-9);
    // the stretched-state surface peaks near m = j cos(beta)
    if (std::string(name).find("mu100") != std::string::npos)
      CHECK(std::abs(peak_m - 50.0 * std::cos(peak_beta)) <= 1.0);
  }
}
