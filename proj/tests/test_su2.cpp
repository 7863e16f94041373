#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spintomo/su2.hpp"

using namespace spintomo;

namespace {
HalfInt half(int twice) { return HalfInt::from_twice(twice); }
constexpr double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("half-integer labels") {
  CHECK(half(3).value() == 1.5);
  CHECK(half(3).str() == "3/2");
  CHECK(HalfInt::whole(2).twice() == 4);
  CHECK(valid_jm(half(3), half(-1)));
  CHECK_FALSE(valid_jm(half(3), half(0)));   // parity mismatch
  CHECK_FALSE(valid_jm(half(3), half(5)));   // |m| > j
  CHECK_FALSE(valid_jm(half(-1), half(1)));  // negative j
  CHECK(m_index(half(3), half(3)) == 0);
  CHECK(m_index(half(3), half(-3)) == 3);
  CHECK(dimension(half(4)) == 5);
  CHECK_THROWS_AS(half(1).to_int(), std::invalid_argument);
}

TEST_CASE("euler angle normalization") {
  const EulerAngles a(-1.0, 0.5, 7.0);
  CHECK(a.alpha == doctest::Approx(2.0 * kPi - 1.0));
  CHECK(a.gamma == doctest::Approx(7.0 - 2.0 * kPi));
  CHECK_THROWS_AS(EulerAngles(0.0, -0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(EulerAngles(0.0, 3.3, 0.0), std::domain_error);
  CHECK_THROWS_AS(EulerAngles(0.0, std::nan(""), 0.0), std::domain_error);
}

TEST_CASE("ln_factorial") {
  CHECK(ln_factorial(0) == 0.0);
  CHECK(ln_factorial(1) == 0.0);
  CHECK(ln_factorial(5) == doctest::Approx(4.787491742782046).epsilon(1e-15));
  // agrees with the log-gamma reference and stays monotone
  double prev = 0.0;
  for (int n = 1; n <= 300; ++n) {
    const double v = ln_factorial(n);
    CHECK(v >= prev);
    if (n >= 2) CHECK(std::abs(v - std::lgamma(n + 1.0)) / v <= 1e-12);
    prev = v;
  }
  CHECK_THROWS_AS(ln_factorial(-1), std::invalid_argument);
}

TEST_CASE("clebsch-gordan values") {
  // <1/2 1/2; 1/2 -1/2 | 0 0> = +1/sqrt(2)
  CHECK(clebsch_gordan(half(1), half(1), half(1), half(-1), half(0), half(0)) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-14));
  // M != m1 + m2
  CHECK(clebsch_gordan(half(1), half(1), half(1), half(1), half(2), half(0)) == 0.0);
  // triangle violation
  CHECK(clebsch_gordan(half(1), half(1), half(1), half(-1), half(6), half(0)) == 0.0);
  // <j m; j -m | 0 0> = (-1)^(j-m)/sqrt(2j+1) for j <= 3
  for (int tj = 1; tj <= 6; ++tj) {
    for (int tm = -tj; tm <= tj; tm += 2) {
      const double expect = parity_sign(half(tj) - half(tm)) / std::sqrt(tj + 1.0);
      CHECK(clebsch_gordan(half(tj), half(tm), half(tj), half(-tm), half(0), half(0)) ==
            doctest::Approx(expect).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(clebsch_gordan(half(1), half(2), half(1), half(0), half(2), half(2)),
                  std::invalid_argument);
}

TEST_CASE("clebsch-gordan against the Racah-sum oracle") {
  for (int tj1 = 1; tj1 <= 4; ++tj1)
    for (int tj2 = tj1 % 2; tj2 <= 4; tj2 += 2)
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2)
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            const int tM = tm1 + tm2;
            if (std::abs(tM) > tJ) continue;
            const double lib =
                clebsch_gordan(half(tj1), half(tm1), half(tj2), half(tm2), half(tJ), half(tM));
            const double ref = oracles::racah_clebsch(tj1, tm1, tj2, tm2, tJ, tM);
            CHECK(lib == doctest::Approx(ref).epsilon(1e-12));
          }
}

TEST_CASE("clebsch-gordan orthogonality") {
  // sum_{m1,m2} <j1 m1; j2 m2|J M><j1 m1; j2 m2|J' M'> = delta_JJ' delta_MM'
  for (int tj1 : {2, 4})
    for (int tj2 : {2, 4})
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2)
        for (int tJp = std::abs(tj1 - tj2); tJp <= tj1 + tj2; tJp += 2)
          for (int tM = -tJ; tM <= tJ; tM += 2)
            for (int tMp = -tJp; tMp <= tJp; tMp += 2) {
              double sum = 0.0;
              for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                const int tm2 = tM - tm1;
                const int tm2p = tMp - tm1;
                if (std::abs(tm2) > tj2 || tm2 != tm2p) continue;
                sum += clebsch_gordan(half(tj1), half(tm1), half(tj2), half(tm2), half(tJ),
                                      half(tM)) *
                       clebsch_gordan(half(tj1), half(tm1), half(tj2), half(tm2), half(tJp),
                                      half(tMp));
              }
              const double expect = (tJ == tJp && tM == tMp) ? 1.0 : 0.0;
              CHECK(sum == doctest::Approx(expect).epsilon(1e-12));
            }
}

TEST_CASE("wigner small-d spot values") {
  for (double beta : {0.0, 0.3, 1.2, 2.9}) {
    CHECK(wigner_small_d(half(1), half(1), half(1), beta) ==
          doctest::Approx(std::cos(beta / 2)).epsilon(1e-14));
    CHECK(wigner_small_d(half(1), half(1), half(-1), beta) ==
          doctest::Approx(-std::sin(beta / 2)).epsilon(1e-14));
  }
  // identity rotation: d(0) = delta exactly
  for (int tj = 1; tj <= 7; ++tj)
    for (int t1 = -tj; t1 <= tj; t1 += 2)
      for (int t2 = -tj; t2 <= tj; t2 += 2)
        CHECK(wigner_small_d(half(tj), half(t1), half(t2), 0.0) == (t1 == t2 ? 1.0 : 0.0));
  // stretched state at j = 50
  for (double beta : {0.4, 1.1, 2.2})
    CHECK(wigner_small_d(HalfInt::whole(50), HalfInt::whole(50), HalfInt::whole(50), beta) ==
          doctest::Approx(std::pow(std::cos(beta / 2), 100)).epsilon(1e-12));
}

TEST_CASE("wigner small-d against the factorial-sum oracle") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> betas(0.0, kPi);
  for (int tj = 1; tj <= 8; ++tj)
    for (int trial = 0; trial < 20; ++trial) {
      const double beta = betas(eng);
      const int t1 = -tj + 2 * static_cast<int>(eng() % (tj + 1));
      const int t2 = -tj + 2 * static_cast<int>(eng() % (tj + 1));
      CHECK(wigner_small_d(half(tj), half(t1), half(t2), beta) ==
            doctest::Approx(oracles::wigner_d_sum(tj, t1, t2, beta)).epsilon(1e-12));
    }
}

TEST_CASE("wigner small-d symmetry and stability") {
  std::mt19937_64 eng(12);
  std::uniform_real_distribution<double> betas(0.0, kPi);
  for (int tj = 1; tj <= 6; ++tj)
    for (int trial = 0; trial < 10; ++trial) {
      const double beta = betas(eng);
      const int t1 = -tj + 2 * static_cast<int>(eng() % (tj + 1));
      const int t2 = -tj + 2 * static_cast<int>(eng() % (tj + 1));
      const double lhs = wigner_small_d(half(tj), half(t1), half(t2), beta);
      const double rhs = parity_sign(half(t1) - half(t2)) *
                         wigner_small_d(half(tj), half(t2), half(t1), beta);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      CHECK(std::abs(lhs) <= 1.0 + 1e-12);
    }
  // finite at j = 50 for every projection pair
  const HalfInt j50 = HalfInt::whole(50);
  for (double beta = 0.1; beta <= 3.01; beta += 0.29)
    for (int m1 = -50; m1 <= 50; m1 += 10)
      for (int m2 = -50; m2 <= 50; m2 += 10)
        CHECK(std::isfinite(wigner_small_d(j50, HalfInt::whole(m1), HalfInt::whole(m2), beta)));
}

TEST_CASE("wigner D-function") {
  std::mt19937_64 eng(13);
  // identity
  for (int t1 = -3; t1 <= 3; t1 += 2)
    for (int t2 = -3; t2 <= 3; t2 += 2)
      CHECK(wigner_D(half(3), half(t1), half(t2), EulerAngles(0, 0, 0)) ==
            Complex(t1 == t2 ? 1.0 : 0.0, 0.0));
  // |D|^2 independent of alpha and gamma
  const double d0 = std::norm(wigner_D(half(2), half(2), half(0), EulerAngles(0.3, 1.1, 2.2)));
  const double d1 = std::norm(wigner_D(half(2), half(2), half(0), EulerAngles(5.3, 1.1, 0.4)));
  CHECK(d0 == doctest::Approx(d1).epsilon(1e-14));
  // row normalization: sum_m2 |D^j_{m1 m2}|^2 = 1
  for (int tj = 1; tj <= 6; ++tj) {
    const EulerAngles ang = oracles::random_angles(eng);
    for (int t1 = -tj; t1 <= tj; t1 += 2) {
      double sum = 0.0;
      for (int t2 = -tj; t2 <= tj; t2 += 2) sum += std::norm(wigner_D(half(tj), half(t1), half(t2), ang));
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("hermite polynomials") {
  CHECK(hermite(0, 1.7) == 1.0);
  for (double x : {-2.0, 0.0, 0.4, 3.1}) CHECK(hermite(2, x) == doctest::Approx(4 * x * x - 2));
  CHECK(hermite(5, 1.0) == doctest::Approx(-8.0));  // 32 - 160 + 120, frozen from the series
  std::mt19937_64 eng(14);
  std::uniform_real_distribution<double> xs(-4.0, 4.0);
  for (int n = 0; n <= 12; ++n) {
    const double x = xs(eng);
    CHECK(hermite(n, x) == doctest::Approx(oracles::hermite_series(n, x)).epsilon(1e-11));
  }
  // scaled evaluation agrees where the plain one is representable
  for (int n : {5, 20, 50}) {
    const double x = 1.3;
    int sign = 0;
    const double ln_abs = hermite_ln_abs(n, x, sign);
    const double plain = hermite(n, x);
    CHECK(sign == (plain > 0 ? 1 : -1));
    CHECK(ln_abs == doctest::Approx(std::log(std::abs(plain))).epsilon(1e-12));
  }
  // and does not overflow where the plain recurrence would
  int sign = 0;
  const double big = hermite_ln_abs(50, 1e6, sign);
  CHECK(std::isfinite(big));
  CHECK(sign == 1);
}
