#pragma once

#include <complex>

namespace genjacobi {

using Complex = std::complex<double>;

// Principal-branch log Gamma for complex argument, Lanczos approximation
// with reflection for Re z < 0.5. Relative accuracy ~1e-13 away from the
// poles at 0, -1, -2, ...
Complex log_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)); overflows for large |Re z| like the real one.
Complex gamma_fn(Complex z);

// 1/Gamma(z), entire; evaluated through the reflection formula near the
// poles of Gamma so it degrades gracefully to 0 there.
Complex recip_gamma(Complex z);

// Principal argument of Gamma(z), in (-pi, pi].
double arg_gamma(Complex z);

// true if z is within tol of a nonpositive integer (a pole of Gamma)
bool near_gamma_pole(Complex z, double tol = 1e-12);

}  // namespace genjacobi
