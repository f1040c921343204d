#include "core/weight.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace genjacobi {

namespace {
constexpr double kPi = std::numbers::pi;
}

AnalyticFactor AnalyticFactor::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "polynomial factor needs at least one coefficient");
  }
  return AnalyticFactor(FactorPolynomial{std::move(coeffs)});
}

double AnalyticFactor::value(double x) const {
  if (is_one()) return 1.0;
  if (const auto* e = as_exp_linear()) return std::exp(e->s * x);
  const auto& c = as_polynomial()->coeffs;
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

Complex AnalyticFactor::value(Complex z) const {
  if (is_one()) return 1.0;
  if (const auto* e = as_exp_linear()) return std::exp(e->s * z);
  const auto& c = as_polynomial()->coeffs;
  Complex v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

Complex AnalyticFactor::log_value(Complex z) const {
  if (is_one()) return 0.0;
  if (const auto* e = as_exp_linear()) return e->s * z;
  return std::log(value(z));
}

double AnalyticFactor::log_value(double x) const {
  if (is_one()) return 0.0;
  if (const auto* e = as_exp_linear()) return e->s * x;
  return std::log(value(x));
}

double AnalyticFactor::log_deriv(double x) const {
  if (is_one()) return 0.0;
  if (const auto* e = as_exp_linear()) return e->s;
  const auto& c = as_polynomial()->coeffs;
  double d = 0.0;
  for (size_t k = c.size(); k-- > 1;) d = d * x + static_cast<double>(k) * c[k];
  return d / value(x);
}

std::string AnalyticFactor::kind_name() const {
  if (is_one()) return "one";
  if (as_exp_linear()) return "explinear";
  return "polynomial";
}

WeightParams validate(WeightParams params) {
  if (params.alpha <= -1.0 || params.beta <= -1.0 || params.gamma <= -1.0) {
    std::ostringstream os;
    os << "exponents must exceed -1: alpha=" << params.alpha
       << " beta=" << params.beta << " gamma=" << params.gamma;
    throw Error(ErrorCode::ExponentOutOfRange, os.str());
  }
  if (!(params.x0 > -1.0 && params.x0 < 1.0)) {
    throw Error(ErrorCode::X0OutOfRange, "x0 must lie strictly inside (-1,1)");
  }
  if (!(params.c2 > 0.0)) {
    throw Error(ErrorCode::JumpNonPositive, "jump height c2 must be positive");
  }

  // positivity of h on a uniform 1001-point grid plus Chebyshev extrema
  const int n_grid = 1001;
  for (int i = 0; i < n_grid; ++i) {
    double xu = -1.0 + 2.0 * i / (n_grid - 1);
    double xc = std::cos(kPi * i / (n_grid - 1));
    if (!(params.h.value(xu) > 0.0) || !(params.h.value(xc) > 0.0)) {
      throw Error(ErrorCode::FactorNotPositive,
                  "analytic factor h is not strictly positive on [-1,1]");
    }
  }

  params.c = std::sqrt(params.c2);
  params.log_c = std::log(params.c);
  params.lambda_im = params.log_c / kPi;
  params.mu = -params.lambda_im;
  return params;
}

double eval_weight(const WeightParams& params, double x) {
  if ((x == 1.0 && params.alpha < 0.0) || (x == -1.0 && params.beta < 0.0) ||
      (x == params.x0 && params.gamma < 0.0)) {
    throw Error(ErrorCode::EvalAtNonintegrableSingularity,
                "weight evaluated at a singular point with negative exponent");
  }
  double v = std::pow(1.0 - x, params.alpha) * std::pow(1.0 + x, params.beta) *
             std::pow(std::abs(params.x0 - x), params.gamma) *
             params.h.value(x);
  if (x >= params.x0) v *= params.c2;
  return v;
}

}  // namespace genjacobi
