#include "fet/aep.hpp"

#include <algorithm>
#include <random>

#include "fet/spectrum.hpp"

namespace fet {

CertificateDistribution CertificateDistribution::from_partition(const SubcubePartition& p) {
  CertificateDistribution d;
  d.codims.reserve(p.cells.size());
  for (const auto& c : p.cells) d.codims.push_back(c.codim());
  return d;
}

CertificateDistribution CertificateDistribution::from_partition(const AffinePartition& p) {
  CertificateDistribution d;
  d.codims.reserve(p.cells.size());
  for (const auto& c : p.cells) d.codims.push_back(c.codim());
  return d;
}

Rational CertificateDistribution::total_measure() const {
  Rational sum(0);
  for (int c : codims) sum += Rational::dyadic(1, c);
  return sum;
}

Rational CertificateDistribution::entropy() const {
  Rational sum(0);
  for (int c : codims) sum += Rational::dyadic(c, c);
  return sum;
}

Rational CertificateDistribution::variance() const {
  Rational mean = entropy();
  Rational second(0);
  for (int c : codims) {
    second += Rational::dyadic(static_cast<Rational::Int>(c) * c, c);
  }
  return second - mean * mean;
}

bool typical_membership(const TypicalSetSpec& spec, std::span<const int> codims) {
  if (static_cast<int>(codims.size()) != spec.copies) {
    throw BadParams("tuple length does not match the copy count");
  }
  std::int64_t total = 0;
  for (int c : codims) total += c;
  Rational mean(total, spec.copies);
  Rational diff = (mean - spec.entropy).abs();
  return diff <= spec.slack;
}

int chebyshev_copies(const CertificateDistribution& dist, const Rational& slack,
                     const Rational& failure) {
  if (slack.sign() <= 0 || failure.sign() <= 0) {
    throw BadParams("Chebyshev rule needs positive slack and failure bound");
  }
  Rational var = dist.variance();
  if (var.is_zero()) return 1;
  Rational bound = var / (slack * slack * failure);
  // ceil(bound)
  Rational::Int m = bound.num() / bound.den();
  if (Rational(m) < bound) ++m;
  if (m > 1000000000) throw BadParams("Chebyshev copy count out of range");
  return std::max<int>(1, static_cast<int>(m));
}

double aep_sample_check(const CertificateDistribution& dist, int copies,
                        const Rational& slack, int trials, std::uint64_t seed) {
  if (trials < 1) throw BadParams("need at least one trial");
  if (copies < 1) throw BadParams("need at least one copy");
  // Cumulative cell weights on a 2^-k grid; k = max codim.
  int k = *std::max_element(dist.codims.begin(), dist.codims.end());
  std::vector<std::uint64_t> cumulative(dist.codims.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < dist.codims.size(); ++i) {
    acc += std::uint64_t(1) << (k - dist.codims[i]);
    cumulative[i] = acc;
  }
  if (acc != (std::uint64_t(1) << k)) {
    throw BadParams("distribution weights do not sum to 1");
  }
  TypicalSetSpec spec{copies, slack, dist.entropy()};
  std::mt19937_64 rng(seed);
  std::vector<int> tuple(copies);
  int typical = 0;
  for (int t = 0; t < trials; ++t) {
    for (int m = 0; m < copies; ++m) {
      // Uniform grid point in [0, 2^k); cells are exact dyadic slices.
      std::uint64_t u = k == 0 ? 0 : rng() >> (64 - k);
      std::size_t cell =
          std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
      tuple[m] = dist.codims[cell];
    }
    typical += typical_membership(spec, tuple);
  }
  return static_cast<double>(typical) / trials;
}

TypicalClaimsReport verify_typical_coefficient_claims(const BooleanFunction& f,
                                                      const SubcubePartition& part,
                                                      int copies, const Rational& delta) {
  if (copies < 1) throw BadParams("need at least one copy");
  int n = f.n();
  int total_vars = n * copies;
  if (total_vars > caps::kTypicalClaimsMaxVars) {
    throw SizeLimit("typical-claims check capped at M*n <= " +
                    std::to_string(caps::kTypicalClaimsMaxVars));
  }
  if (delta.sign() < 0) throw BadParams("delta must be nonnegative");

  TypicalClaimsReport r;
  r.copies = copies;
  r.delta = delta;
  r.auc = verify_partition(f, part);

  std::size_t cells = part.cells.size();
  TypicalSetSpec spec{copies, delta, r.auc};

  // Walk all M-tuples of cells; mark the coefficient masks contributed by the
  // typical ones and accumulate the probability mass of the atypical ones.
  std::uint64_t coeff_space = std::uint64_t(1) << total_vars;
  std::vector<bool> in_b(coeff_space, false);
  Rational atypical(0);
  std::vector<std::size_t> tuple(copies, 0);
  std::vector<int> codims(copies);
  while (true) {
    int codim_sum = 0;
    for (int m = 0; m < copies; ++m) {
      codims[m] = part.cells[tuple[m]].codim();
      codim_sum += codims[m];
    }
    if (typical_membership(spec, codims)) {
      // Every (S_1..S_M) with S_i inside the fixed support of cell i.
      std::vector<std::uint64_t> supports(copies);
      for (int m = 0; m < copies; ++m) {
        supports[m] = part.cells[tuple[m]].fixed_mask << (m * n);
      }
      std::uint64_t all = 0;
      for (std::uint64_t s : supports) all |= s;
      std::uint64_t sub = 0;
      while (true) {
        in_b[sub] = true;
        if (sub == all) break;
        sub = (sub - all) & all;
      }
    } else {
      atypical += Rational::dyadic(1, codim_sum);
    }
    int m = copies - 1;
    while (m >= 0 && ++tuple[m] == cells) {
      tuple[m] = 0;
      --m;
    }
    if (m < 0) break;
  }
  r.atypical_mass = atypical;
  std::uint64_t b_size = 0;
  for (bool b : in_b) b_size += b;
  r.coefficient_set_size = b_size;

  // Claim 1: |B| <= 2^(2M(aUC + delta)), decided exactly for a dyadic bound.
  Rational exponent = Rational(2 * copies) * (r.auc + delta);
  if (exponent.den() > 64) throw BadParams("delta must be dyadic for the exact size bound");
  int den_log = 0;
  while ((Rational::Int(1) << den_log) < exponent.den()) ++den_log;
  if ((Rational::Int(1) << den_log) != exponent.den()) {
    throw BadParams("delta must be dyadic for the exact size bound");
  }
  // |B|^den <= 2^num with num = exponent.num(), den = 2^den_log.
  Rational::Int num = exponent.num();
  if (num / exponent.den() >= total_vars) {
    r.size_bound_ok = true;  // bound already covers every possible |B|
  } else if (num >= 120) {
    r.size_bound_ok = true;
  } else {
    unsigned __int128 lhs = 1;
    bool overflow = false;
    for (Rational::Int i = 0; i < exponent.den(); ++i) {
      unsigned __int128 next = lhs * b_size;
      if (b_size != 0 && next / b_size != lhs) {
        overflow = true;  // lhs >= 2^128 > 2^num, so the bound fails
        break;
      }
      lhs = next;
    }
    r.size_bound_ok = !overflow && lhs <= (static_cast<unsigned __int128>(1) << num);
  }

  // Claim 2: Fourier weight outside B is at most the atypical mass, exactly.
  // The spectrum of the M-fold product is the tensor of the base spectrum.
  FourierSpectrum base = wht(f);
  Rational residual(0);
  std::uint64_t block_mask = (std::uint64_t(1) << n) - 1;
  for (std::uint64_t mask = 0; mask < coeff_space; ++mask) {
    if (in_b[mask]) continue;
    __int128 c = 1;
    for (int m = 0; m < copies; ++m) {
      c *= base.coeff((mask >> (m * n)) & block_mask);
      if (c == 0) break;
    }
    if (c != 0) {
      residual += Rational(c * c, static_cast<__int128>(1) << (2 * total_vars));
    }
  }
  r.residual_weight = residual;
  r.weight_bound_ok = residual <= atypical;
  return r;
}

}  // namespace fet
