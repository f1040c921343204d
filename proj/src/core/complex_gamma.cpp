#include "core/complex_gamma.hpp"

#include <cmath>
#include <numbers>

namespace genjacobi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Complex log_gamma_positive(Complex z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int k = 1; k < 9; ++k) {
    x += kLanczos[k] / (z + static_cast<double>(k));
  }
  Complex t = z + 7.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (z.real() >= 0.5) {
    return log_gamma_positive(z);
  }
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  Complex s = std::sin(kPi * z);
  return std::log(kPi) - std::log(s) - log_gamma_positive(1.0 - z);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

Complex recip_gamma(Complex z) {
  if (z.real() >= 0.5) {
    return std::exp(-log_gamma_positive(z));
  }
  return std::sin(kPi * z) / kPi * std::exp(log_gamma_positive(1.0 - z));
}

double arg_gamma(Complex z) {
  double a = std::remainder(log_gamma(z).imag(), 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

bool near_gamma_pole(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

}  // namespace genjacobi
