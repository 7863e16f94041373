#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace spintomo {

/// Exact half-integer angular-momentum label (j, m, L, M, mu).
///
/// Stored as the doubled value, so triangle and parity checks are integer
/// arithmetic. A label with twice() == 3 is j = 3/2.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

  /// Integer value of a label known to be integral (throws otherwise).
  int to_int() const {
    if (!is_integer()) throw std::invalid_argument("HalfInt: label " + str() + " is not an integer");
    return twice_ / 2;
  }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice_); }

 private:
  explicit constexpr HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// True when (j, m) is a valid spin label pair: j >= 0, |m| <= j, j - m integral.
constexpr bool valid_jm(HalfInt j, HalfInt m) {
  return j.twice() >= 0 && std::abs(m.twice()) <= j.twice() &&
         (j.twice() - m.twice()) % 2 == 0;
}

inline void require_valid_jm(HalfInt j, HalfInt m, const char* what = "(j,m)") {
  if (!valid_jm(j, m))
    throw std::invalid_argument(std::string("invalid ") + what + " pair: j=" + j.str() +
                                ", m=" + m.str());
}

/// Hilbert-space dimension 2j+1 of a spin-j system.
inline int dimension(HalfInt j) {
  if (j.twice() < 0) throw std::invalid_argument("dimension: negative j");
  return j.twice() + 1;
}

/// Row/column index of projection m; index 0 corresponds to m = j (descending m).
inline int m_index(HalfInt j, HalfInt m) {
  require_valid_jm(j, m);
  return (j.twice() - m.twice()) / 2;
}

inline HalfInt m_from_index(HalfInt j, int index) {
  return HalfInt::from_twice(j.twice() - 2 * index);
}

/// (-1)^(a) for a half-integer difference known to be integral.
inline double parity_sign(HalfInt a) {
  return a.to_int() % 2 == 0 ? 1.0 : -1.0;
}

/// zyz Euler angles. alpha and gamma are normalized into [0, 2*pi);
/// beta must lie in [0, pi].
struct EulerAngles {
  EulerAngles() = default;
  EulerAngles(double a, double b, double g) : alpha(a), beta(b), gamma(g) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(g)))
      throw std::domain_error("EulerAngles: non-finite angle");
    if (b < 0.0 || b > 4.0 * std::atan(1.0))
      throw std::domain_error("EulerAngles: beta outside [0, pi]");
    const double two_pi = 8.0 * std::atan(1.0);
    alpha = std::fmod(a, two_pi);
    if (alpha < 0.0) alpha += two_pi;
    gamma = std::fmod(g, two_pi);
    if (gamma < 0.0) gamma += two_pi;
  }

  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

}  // namespace spintomo
