#include "fet/lp.hpp"

#include <cmath>

#include "fet/simplex.hpp"
#include "fet/spectrum.hpp"

namespace fet {

namespace {

void check_lp_caps(const BooleanFunction& f, double eps, int d) {
  if (f.n() > caps::kLpMaxVars) {
    throw SizeLimit("LP solves are capped at n <= " + std::to_string(caps::kLpMaxVars));
  }
  if (eps < 0 || eps >= 1) throw BadParams("eps must lie in [0, 1)");
  if (d < 0 || d > f.n()) throw BadParams("degree bound out of range");
}

std::vector<std::uint64_t> monomials_up_to(int n, int d) {
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
    if (popcount(m) <= d) masks.push_back(m);
  }
  return masks;
}

// Rows: for every input x the pair
//   sum_S (u_S - v_S) chi_S(x) <= f(x) + eps
//  -sum_S (u_S - v_S) chi_S(x) <= eps - f(x)
// Columns: u block then v block; objective sum u + sum v.
template <typename Scalar>
void build_program(const BooleanFunction& f, const Scalar& eps,
                   const std::vector<std::uint64_t>& masks,
                   std::vector<std::vector<Scalar>>& a, std::vector<Scalar>& b,
                   std::vector<Scalar>& c) {
  std::size_t k = masks.size();
  std::uint64_t points = f.table_size();
  a.assign(2 * points, std::vector<Scalar>(2 * k, Scalar(0)));
  b.assign(2 * points, Scalar(0));
  c.assign(2 * k, Scalar(1));
  for (std::uint64_t x = 0; x < points; ++x) {
    auto& plus = a[2 * x];
    auto& minus = a[2 * x + 1];
    for (std::size_t j = 0; j < k; ++j) {
      Scalar chi = parity_bit(x, masks[j]) ? Scalar(-1) : Scalar(1);
      plus[j] = chi;
      plus[k + j] = -chi;
      minus[j] = -chi;
      minus[k + j] = chi;
    }
    Scalar fx(f.value(x));
    b[2 * x] = fx + eps;
    b[2 * x + 1] = eps - fx;
  }
}

}  // namespace

LpResult approx_spectral_norm(const BooleanFunction& f, double eps, int d) {
  check_lp_caps(f, eps, d);
  auto masks = monomials_up_to(f.n(), d);
  std::vector<std::vector<double>> a;
  std::vector<double> b, c;
  build_program(f, eps, masks, a, b, c);
  DenseSimplex<double> solver(std::move(a), std::move(b), std::move(c), 1e-9);
  LpStatus status = solver.solve();
  if (status == LpStatus::Infeasible) {
    throw Infeasible("no degree-" + std::to_string(d) + " polynomial is within eps of f");
  }
  if (status != LpStatus::Optimal) throw InternalError("unbounded spectral-norm program");

  LpResult result{0, SparsePolynomial(f.n()), DualWitness{}, 0};
  result.optimum = solver.objective();
  auto x = solver.primal();
  std::size_t k = masks.size();
  for (std::size_t j = 0; j < k; ++j) {
    double cs = x[j] - x[k + j];
    if (std::fabs(cs) > SparsePolynomial::kDust) {
      result.minimizer.set_coeff(masks[j], cs);
    }
  }

  // phi(x) = y+(x) - y-(x); see the dual box.
  auto y = solver.duals();
  DualWitness& w = result.dual;
  w.n = f.n();
  w.values.resize(f.table_size());
  double dual_obj = 0;
  for (std::uint64_t p = 0; p < f.table_size(); ++p) {
    w.values[p] = y[2 * p] - y[2 * p + 1];
    dual_obj += w.values[p] * f.value(p) - eps * std::fabs(w.values[p]);
  }
  w.objective = dual_obj;
  // Feasibility: |phihat(S)| <= 2^-n for |S| <= d.
  w.feasible = true;
  double cap = std::ldexp(1.0, -f.n()) + 1e-9;
  for (std::uint64_t s = 0; s < f.table_size(); ++s) {
    if (popcount(s) > d) continue;
    double acc = 0;
    for (std::uint64_t p = 0; p < f.table_size(); ++p) {
      acc += parity_bit(p, s) ? -w.values[p] : w.values[p];
    }
    if (std::fabs(std::ldexp(acc, -f.n())) > cap) {
      w.feasible = false;
      break;
    }
  }
  result.duality_gap = std::fabs(result.optimum - dual_obj);
  if (result.duality_gap > 1e-6 * (1.0 + std::fabs(result.optimum))) {
    throw InternalError("duality gap " + std::to_string(result.duality_gap) +
                        " exceeds tolerance");
  }
  return result;
}

int approx_degree(const BooleanFunction& f, double eps) {
  check_lp_caps(f, eps, 0);
  for (int d = 0; d <= f.n(); ++d) {
    auto masks = monomials_up_to(f.n(), d);
    std::vector<std::vector<double>> a;
    std::vector<double> b, c;
    build_program(f, eps, masks, a, b, c);
    DenseSimplex<double> solver(std::move(a), std::move(b), std::move(c), 1e-9);
    if (solver.solve(/*feasibility_only=*/true) == LpStatus::Optimal) return d;
  }
  throw InternalError("exact representation must be feasible at d = n");
}

DualWitness canonical_dual_witness(const BooleanFunction& f, double eps) {
  if (eps < 0 || eps >= 1) throw BadParams("eps must lie in [0, 1)");
  FourierSpectrum s = wht(f);
  double scale = static_cast<double>(s.max_abs_coeff());
  DualWitness w;
  w.n = f.n();
  w.values.resize(f.table_size());
  for (std::uint64_t p = 0; p < f.table_size(); ++p) {
    w.values[p] = f.value(p) / scale;
  }
  // phi f = |phi| pointwise, so the objective telescopes.
  w.objective = (1.0 - eps) * std::ldexp(1.0, f.n()) / scale;
  // |phihat(S)| = |fhat(S)| / (2^n max |fhat|) <= 2^-n by construction.
  w.feasible = true;
  return w;
}

Rational canonical_dual_objective_exact(const BooleanFunction& f, const Rational& eps) {
  if (eps.sign() < 0 || eps >= Rational(1)) throw BadParams("eps must lie in [0, 1)");
  FourierSpectrum s = wht(f);
  Rational scale(s.max_abs_coeff());
  // sum_x phi(x) f(x) - eps sum_x |phi(x)| with phi = f / max|c|, summed exactly.
  Rational per_point = (Rational(1) - eps) / scale;
  return per_point * Rational(static_cast<std::int64_t>(f.table_size()));
}

MinentropyNormReport verify_minentropy_vs_norm(const BooleanFunction& f, double eps) {
  MinentropyNormReport r;
  r.eps_degree = approx_degree(f, eps);
  LpResult lp = approx_spectral_norm(f, eps, r.eps_degree);
  r.norm = lp.optimum;
  r.bound = 2.0 * std::log2(r.norm / (1.0 - eps));
  r.min_entropy = min_entropy(wht(f));
  r.holds = r.min_entropy <= r.bound + 1e-6;
  return r;
}

}  // namespace fet
