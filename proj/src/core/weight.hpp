#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "core/errors.hpp"

namespace genjacobi {

using Complex = std::complex<double>;

// Analytic factor h of the weight: a closed family so that positivity,
// analyticity and log h stay checkable and the CLI config serializable.
struct FactorOne {};

struct FactorExpLinear {
  double s = 0.0;  // h(x) = exp(s*x)
};

struct FactorPolynomial {
  std::vector<double> coeffs;  // ascending powers
};

class AnalyticFactor {
 public:
  AnalyticFactor() : rep_(FactorOne{}) {}
  static AnalyticFactor one() { return AnalyticFactor(FactorOne{}); }
  static AnalyticFactor exp_linear(double s) {
    return AnalyticFactor(FactorExpLinear{s});
  }
  static AnalyticFactor polynomial(std::vector<double> coeffs);

  double value(double x) const;
  Complex value(Complex z) const;
  // principal-branch log h(z); real log h(x) on the interval for valid h
  Complex log_value(Complex z) const;
  double log_value(double x) const;
  // (log h)'(x), used to regularize difference quotients near a pole
  double log_deriv(double x) const;

  bool is_one() const { return std::holds_alternative<FactorOne>(rep_); }
  const FactorExpLinear* as_exp_linear() const {
    return std::get_if<FactorExpLinear>(&rep_);
  }
  const FactorPolynomial* as_polynomial() const {
    return std::get_if<FactorPolynomial>(&rep_);
  }

  std::string kind_name() const;

 private:
  template <class T>
  explicit AnalyticFactor(T rep) : rep_(std::move(rep)) {}

  std::variant<FactorOne, FactorExpLinear, FactorPolynomial> rep_;
};

// Full parameter set of the weight
//   w(x) = (1-x)^alpha (1+x)^beta |x0-x|^gamma h(x) Xi_c(x),
// Xi_c = 1 on [-1,x0), c^2 on [x0,1].  Instances are immutable after
// validate(); derived fields are filled there.
struct WeightParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double x0 = 0.0;
  double c2 = 1.0;
  AnalyticFactor h;

  // derived, filled by validate()
  double c = 1.0;
  double log_c = 0.0;
  double lambda_im = 0.0;  // lambda = i*log(c)/pi
  double mu = 0.0;         // mu = -log(c)/pi = -lambda_im

  Complex lambda() const { return Complex(0.0, lambda_im); }

  // degenerate case: no interior singularity at all (gamma=0 and c^2=1)
  bool degenerate_no_singularity() const {
    return gamma * gamma / 4.0 + mu * mu < 1e-20;
  }
};

// Validates ranges and positivity of h (uniform 1001-point grid plus
// Chebyshev extrema), fills derived fields. Throws Error on violation.
WeightParams validate(WeightParams params);

// Pointwise weight value; Xi_c(x0) = c^2 by the half-open convention.
// Throws EvalAtNonintegrableSingularity when x hits a singular point whose
// exponent is negative.
double eval_weight(const WeightParams& params, double x);

}  // namespace genjacobi
