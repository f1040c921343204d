#pragma once

#include <utility>
#include <vector>

#include "core/weight.hpp"

namespace genjacobi {

// Jacobi-matrix form of a measure: diagonal b_k, nonnegative offdiagonal a_k.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size diag.size()-1
};

struct TridiagEigen {
  std::vector<double> eigenvalues;               // ascending
  std::vector<double> first_components_squared;  // of unit eigenvectors
};

// Implicit-shift QL iteration for a symmetric tridiagonal matrix, tracking
// only the first row of the accumulated eigenvector matrix (Golub-Welsch).
// Throws NoConvergence if the iteration cap is exceeded.
TridiagEigen tridiag_eigen(const SymTridiag& t);

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (lo, hi)
  std::vector<double> weights;  // positive
  double lo = -1.0;
  double hi = 1.0;
  int exact_degree = 0;  // polynomial exactness against the attached weight

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0, comp = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
      double term = weights[i] * f(nodes[i]);
      double t = s + term;
      if (std::abs(s) >= std::abs(term))
        comp += (s - t) + term;
      else
        comp += (term - t) + s;
      s = t;
    }
    return s + comp;
  }
};

// n-point rule exact through degree 2n-1 for the weight
// (hi-x)^p (x-lo)^q on (lo, hi); built from the closed-form Jacobi
// recurrence coefficients and tridiag_eigen.
QuadratureRule gauss_jacobi(int n_nodes, double p, double q, double lo,
                            double hi);

// Closed-form monic Jacobi recurrence coefficients for (1-x)^p (1+x)^q on
// (-1,1): b_n for n >= 0 and a_n^2 for n >= 1. Exposed because they double
// as exact reference values.
double jacobi_monic_b(int n, double p, double q);
double jacobi_monic_a2(int n, double p, double q);

// log of the total mass of (1-x)^p (1+x)^q on (-1,1)
double jacobi_log_mass(double p, double q);

// Two Gauss-Jacobi pieces joined at x0, endpoint exponents taken from the
// weight, smooth leftover factors (h, the far endpoint factor and the jump
// height) multiplied into the weights pointwise. Integrates poly * w with
// error decaying geometrically in n_nodes_per_piece.
QuadratureRule composite_rule(const WeightParams& params,
                              int n_nodes_per_piece);

// Node-count rule used by the recurrence module: exactness through degree
// 2*n_max plus margin for the analytic leftover factors.
inline int composite_sizing(int n_max) { return 2 * n_max + 64; }

}  // namespace genjacobi
