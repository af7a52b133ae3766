#include "fet/polyform.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fet/spectrum.hpp"

namespace fet {

FlatPolynomialReport flat_report(const SparsePolynomial& p, double eps, bool strict_flat) {
  if (eps < 0 || eps >= 1) throw BadParams("eps must lie in [0, 1)");
  FlatPolynomialReport r;
  r.sparsity = p.sparsity();
  r.degree = p.degree();
  r.is_flat = true;
  double magnitude = -1;
  for (const auto& [mask, c] : p.terms()) {
    double a = std::fabs(c);
    if (magnitude < 0) {
      magnitude = a;
    } else if (std::fabs(a - magnitude) > 1e-12) {
      r.is_flat = false;
    }
  }
  r.magnitude = magnitude < 0 ? 0 : magnitude;
  if (strict_flat && !r.is_flat) throw NotFlat("coefficient magnitudes differ");

  // Nearest Boolean function is the pointwise sign; a zero value leaves it
  // undefined and the polynomial approximates nothing.
  BooleanFunction nearest(p.n());
  r.approximates_boolean = true;
  bool sign_defined = true;
  double worst = 0;
  for (std::uint64_t x = 0; x < nearest.table_size(); ++x) {
    double v = p.eval(x);
    if (v == 0) {
      sign_defined = false;
      r.approximates_boolean = false;
      break;
    }
    nearest.set_value(x, v > 0 ? +1 : -1);
    worst = std::max(worst, std::fabs(std::fabs(v) - 1.0));
  }
  if (!sign_defined) {
    r.linf_distance = 1.0;
    return r;
  }
  r.linf_distance = worst;
  r.approximates_boolean = worst <= eps + 1e-12;
  r.nearest = nearest;
  if (r.approximates_boolean) {
    r.entropy = shannon_entropy(wht(nearest));
    double t = static_cast<double>(r.sparsity);
    r.entropy_bound =
        (1.0 - 4.0 * eps * eps) * std::log2(t / (4.0 * (1.0 + eps) * (1.0 + eps)));
    r.bound_holds = r.entropy >= r.entropy_bound - 1e-9;
  }
  return r;
}

BlockMultilinearForm::BlockMultilinearForm(std::vector<std::vector<int>> blocks,
                                           SparsePolynomial poly)
    : blocks_(std::move(blocks)), poly_(std::move(poly)) {
  if (blocks_.empty()) throw BadParams("form needs at least one block");
  block_size_ = static_cast<int>(blocks_[0].size());
  if (block_size_ < 1) throw BadParams("blocks must be nonempty");
  block_of_.assign(poly_.n(), -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (static_cast<int>(blocks_[b].size()) != block_size_) {
      throw BadParams("blocks must have equal sizes");
    }
    for (int var : blocks_[b]) {
      if (var < 0 || var >= poly_.n()) throw BadParams("block variable out of range");
      if (block_of_[var] != -1) throw BadParams("variable in two blocks");
      block_of_[var] = static_cast<int>(b);
    }
  }
  for (int var = 0; var < poly_.n(); ++var) {
    if (block_of_[var] == -1) throw BadParams("variable not covered by a block");
  }
  for (const auto& [mask, c] : poly_.terms()) {
    std::vector<int> seen(blocks_.size(), 0);
    for (int var = 0; var < poly_.n(); ++var) {
      if ((mask >> var & 1) && ++seen[block_of_[var]] > 1) {
        throw BadParams("monomial uses a block twice");
      }
    }
  }
}

namespace {

// Non-block variables of a mask, packed ascending; and the inverse mapping.
std::vector<int> vars_outside_block(const BlockMultilinearForm& p, int block) {
  std::vector<int> z;
  for (int var = 0; var < p.total_vars(); ++var) {
    if (p.block_of(var) != block) z.push_back(var);
  }
  return z;
}

std::uint64_t compress_mask(std::uint64_t mask, const std::vector<int>& vars) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (mask >> vars[i] & 1) out |= std::uint64_t(1) << i;
  }
  return out;
}

std::uint64_t expand_mask(std::uint64_t packed, const std::vector<int>& vars) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (packed >> i & 1) out |= std::uint64_t(1) << vars[i];
  }
  return out;
}

}  // namespace

QDecomposition q_decompose(const BlockMultilinearForm& p, int block) {
  if (block < 0 || block >= p.block_count()) throw BadParams("block index out of range");
  std::vector<int> zvars = vars_outside_block(p, block);
  int zn = static_cast<int>(zvars.size());
  QDecomposition d(zn);
  d.block = block;
  d.vars = p.blocks()[block];
  std::sort(d.vars.begin(), d.vars.end());
  d.q.assign(d.vars.size(), SparsePolynomial(zn));
  for (const auto& [mask, c] : p.poly().terms()) {
    int owner = -1;
    for (std::size_t i = 0; i < d.vars.size(); ++i) {
      if (mask >> d.vars[i] & 1) {
        owner = static_cast<int>(i);
        break;
      }
    }
    if (owner < 0) {
      d.q0.add_coeff(compress_mask(mask, zvars), c);
    } else {
      std::uint64_t rest = mask & ~(std::uint64_t(1) << d.vars[owner]);
      d.q[owner].add_coeff(compress_mask(rest, zvars), c);
    }
  }
  // Identity spot-check: all-ones, all-minus-ones, and 100 seeded points.
  std::mt19937_64 rng(12345);
  std::uint64_t space = std::uint64_t(1) << p.total_vars();
  auto check_at = [&](std::uint64_t x) {
    double direct = p.poly().eval(x);
    std::uint64_t z = compress_mask(x, zvars);
    double split = d.q0.eval(z);
    for (std::size_t i = 0; i < d.vars.size(); ++i) {
      double xi = (x >> d.vars[i] & 1) ? -1.0 : 1.0;
      split += xi * d.q[i].eval(z);
    }
    return std::fabs(direct - split) <= 1e-9;
  };
  d.identity_ok = check_at(0) && check_at(space - 1);
  for (int trial = 0; trial < 100 && d.identity_ok; ++trial) {
    d.identity_ok = check_at(rng() & (space - 1));
  }
  if (!d.identity_ok) throw InternalError("q-decomposition identity failed");
  return d;
}

namespace {

// Rounds toward the nearest of {-1, 0, 1}; tolerance 1/8 (+ float slack).
std::optional<int> round_third(double v) {
  for (int target : {-1, 0, 1}) {
    if (std::fabs(v - target) <= 0.125 + 1e-12) return target;
  }
  return std::nullopt;
}

void check_eighth_approx(const BlockMultilinearForm& p) {
  std::uint64_t space = std::uint64_t(1) << p.total_vars();
  for (std::uint64_t x = 0; x < space; ++x) {
    double v = p.poly().eval(x);
    if (std::fabs(std::fabs(v) - 1.0) > 0.125 + 1e-12) {
      throw NotOneEighthApprox("form value " + std::to_string(v) + " at input " +
                               std::to_string(x));
    }
  }
}

}  // namespace

QStructureReport verify_q_structure(const BlockMultilinearForm& p) {
  check_eighth_approx(p);
  QStructureReport r;
  r.block = 0;
  QDecomposition d = q_decompose(p, 0);
  int zn = p.total_vars() - p.block_size();
  std::uint64_t zspace = std::uint64_t(1) << zn;
  r.large_index.assign(zspace, -2);
  r.interval_ok = true;
  r.unique_ok = true;
  for (std::uint64_t z = 0; z < zspace; ++z) {
    double q0 = d.q0.eval(z);
    std::vector<double> values{q0};
    for (const auto& qi : d.q) values.push_back(qi.eval(z));
    int large = -2;
    double small_sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      double a = std::fabs(values[i]);
      bool in_interval = a <= 0.125 + 1e-12 ||
                         (a >= 0.875 - 1e-12 && a <= 1.125 + 1e-12);
      if (!in_interval) r.interval_ok = false;
      if (a >= 0.875 - 1e-12) {
        if (large != -2) r.unique_ok = false;  // two large pieces
        large = static_cast<int>(i) - 1;       // -1 encodes q0
      } else {
        small_sum += a;
      }
    }
    if (large == -2) r.unique_ok = false;
    if (small_sum > 0.125 + 1e-12) r.unique_ok = false;
    r.large_index[z] = large;
  }
  return r;
}

ReconstructResult reconstruct_boolean(const BlockMultilinearForm& p) {
  if (p.total_vars() > caps::kReconstructMaxVars) {
    throw SizeLimit("reconstruction capped at " +
                    std::to_string(caps::kReconstructMaxVars) + " variables");
  }
  check_eighth_approx(p);
  QDecomposition d = q_decompose(p, 0);
  std::vector<int> zvars = vars_outside_block(p, 0);
  int zn = static_cast<int>(zvars.size());
  std::uint64_t zspace = std::uint64_t(1) << zn;

  // Round every q-piece to its {-1,0,1} value and interpolate exactly.
  auto rounded_poly = [&](const SparsePolynomial& q) {
    std::vector<double> values(zspace);
    for (std::uint64_t z = 0; z < zspace; ++z) {
      auto r = round_third(q.eval(z));
      if (!r) throw NotOneEighthApprox("q-piece strays from {-1,0,1} at z=" + std::to_string(z));
      values[z] = *r;
    }
    return SparsePolynomial::interpolate(zn, values);
  };

  SparsePolynomial reconstructed(p.total_vars());
  auto lift = [&](const SparsePolynomial& qz, std::uint64_t extra_var_mask) {
    for (const auto& [packed, c] : qz.terms()) {
      reconstructed.add_coeff(expand_mask(packed, zvars) | extra_var_mask, c);
    }
  };
  lift(rounded_poly(d.q0), 0);
  for (std::size_t i = 0; i < d.vars.size(); ++i) {
    lift(rounded_poly(d.q[i]), std::uint64_t(1) << d.vars[i]);
  }
  reconstructed.prune(0.0);

  ReconstructResult result{std::move(reconstructed), BooleanFunction(p.total_vars())};
  std::uint64_t space = std::uint64_t(1) << p.total_vars();
  for (std::uint64_t x = 0; x < space; ++x) {
    result.f.set_value(x, p.poly().eval(x) > 0 ? +1 : -1);
  }
  for (std::uint64_t x = 0; x < space; ++x) {
    double v = result.exact.eval(x);
    if (std::fabs(v - result.f.value(x)) > 1e-9) {
      throw InternalError("reconstructed polynomial disagrees with f at " +
                          std::to_string(x));
    }
  }
  if (result.exact.degree() > p.block_count()) {
    throw InternalError("reconstructed polynomial exceeds the block degree");
  }
  return result;
}

BhReport bh_quantities(const BlockMultilinearForm& p, std::uint64_t seed) {
  int d = p.block_count();
  BhReport r;
  r.constant = std::pow(static_cast<double>(d), (d + 1.0) / (2.0 * d)) *
               std::exp2((d - 1.0) / 2.0);

  // Degree-d part: one variable from every block.
  SparsePolynomial top(p.total_vars());
  for (const auto& [mask, c] : p.poly().terms()) {
    if (popcount(mask) == d) top.set_coeff(mask, c);
  }
  double power = 2.0 * d / (d + 1.0);
  double acc = 0;
  for (const auto& [mask, c] : top.terms()) {
    acc += std::pow(std::fabs(c), power);
  }
  r.lhs = acc == 0 ? 0 : std::pow(acc, 1.0 / power);

  std::uint64_t space = std::uint64_t(1) << p.total_vars();
  unsigned __int128 budget =
      static_cast<unsigned __int128>(std::max<std::uint64_t>(top.sparsity(), 1)) * space;
  if (budget <= caps::kBhExactBudget) {
    r.exact_norm = true;
    double best = 0;
    for (std::uint64_t x = 0; x < space; ++x) {
      best = std::max(best, std::fabs(top.eval(x)));
    }
    r.norm = best;
  } else {
    // Coordinate ascent with restarts; reports a lower bound on the norm.
    r.exact_norm = false;
    std::mt19937_64 rng(seed);
    double best = 0;
    for (int restart = 0; restart < 32; ++restart) {
      std::uint64_t x = rng() & (space - 1);
      double value = std::fabs(top.eval(x));
      bool improved = true;
      while (improved) {
        improved = false;
        for (int j = 0; j < p.total_vars(); ++j) {
          std::uint64_t y = x ^ (std::uint64_t(1) << j);
          double v = std::fabs(top.eval(y));
          if (v > value + 1e-15) {
            value = v;
            x = y;
            improved = true;
          }
        }
      }
      best = std::max(best, value);
    }
    r.norm = best;
  }
  r.ratio = r.norm > 0 ? r.lhs / r.norm : 0.0;
  r.holds = r.ratio <= r.constant + 1e-9;
  return r;
}

LevelMassReport level_mass(const BooleanFunction& f, int d) {
  if (d < 0 || d > f.n()) throw BadParams("level out of range");
  FourierSpectrum s = wht(f);
  __int128 sum = 0;
  for (std::uint64_t mask = 0; mask < s.size(); ++mask) {
    if (popcount(mask) == d) {
      std::int64_t c = s.coeff(mask);
      sum += c < 0 ? -static_cast<__int128>(c) : c;
    }
  }
  LevelMassReport r;
  r.mass = Rational(sum, static_cast<__int128>(1) << f.n());
  // binom(n, d)
  unsigned __int128 binom = 1;
  for (int i = 1; i <= d; ++i) {
    binom = binom * static_cast<unsigned>(f.n() - d + i) / static_cast<unsigned>(i);
  }
  r.threshold = std::sqrt(static_cast<double>(binom)) / 3.0;
  // mass >= sqrt(binom)/3  <=>  9 mass^2 >= binom, exactly.
  Rational nine_mass_sq = r.mass * r.mass * Rational(9);
  r.exceeds = nine_mass_sq >= Rational(static_cast<Rational::Int>(binom));
  return r;
}

}  // namespace fet
