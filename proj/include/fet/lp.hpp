#pragma once

#include <cstdint>
#include <vector>

#include "fet/boolean_function.hpp"
#include "fet/rational.hpp"
#include "fet/sparse_polynomial.hpp"

namespace fet {

// Dual-feasible witness for the approximate-spectral-norm program:
// phi : {-1,1}^n -> R with |phihat(S)| <= 2^-n for |S| <= d, valued by
// sum_x phi(x) f(x) - eps sum_x |phi(x)|.
struct DualWitness {
  int n = 0;
  std::vector<double> values;
  double objective = 0;
  bool feasible = false;  // coefficient constraints hold within 1e-9
};

struct LpResult {
  double optimum = 0;
  SparsePolynomial minimizer;
  DualWitness dual;
  double duality_gap = 0;
};

// ||fhat||_{1,eps,d}: minimum spectral norm over degree-<=d polynomials within
// eps of f everywhere on the cube. Throws Infeasible when d < deg_eps(f);
// n <= 10, 0 <= eps < 1.
LpResult approx_spectral_norm(const BooleanFunction& f, double eps, int d);

// Exact-rational pivoting mode (regression baseline), n <= 6.
Rational approx_spectral_norm_exact(const BooleanFunction& f, const Rational& eps, int d);

// Smallest d with a feasible program; linear scan with feasibility-only solves.
int approx_degree(const BooleanFunction& f, double eps);

// phi(x) = f(x) / (2^n max_S |fhat(S)|); feasible for every d, objective
// (1 - eps) / max_S |fhat(S)|.
DualWitness canonical_dual_witness(const BooleanFunction& f, double eps);
Rational canonical_dual_objective_exact(const BooleanFunction& f, const Rational& eps);

struct MinentropyNormReport {
  double min_entropy = 0;
  double norm = 0;         // ||fhat||_{1,eps} at d = deg_eps(f)
  double bound = 0;        // 2 log2(norm / (1 - eps))
  int eps_degree = 0;
  bool holds = false;      // min_entropy <= bound + 1e-6
};

MinentropyNormReport verify_minentropy_vs_norm(const BooleanFunction& f, double eps);

}  // namespace fet
