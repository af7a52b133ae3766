#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fet/boolean_function.hpp"
#include "fet/partitions.hpp"
#include "fet/rational.hpp"

namespace fet {

// The cell-valued random variable of a partition: cell i with probability
// 2^-codim_i. Probabilities sum to 1 for a valid partition, and the entropy
// equals the average co-dimension exactly.
struct CertificateDistribution {
  std::vector<int> codims;

  static CertificateDistribution from_partition(const SubcubePartition& p);
  static CertificateDistribution from_partition(const AffinePartition& p);

  Rational probability(std::size_t cell) const { return Rational::dyadic(1, codims[cell]); }
  Rational total_measure() const;
  Rational entropy() const;   // sum codim * 2^-codim = aUC
  Rational variance() const;  // Var of the co-dimension
};

struct TypicalSetSpec {
  int copies = 1;    // M
  Rational slack;    // delta
  Rational entropy;  // H
};

// Mean co-dimension within [H - delta, H + delta], decided exactly.
bool typical_membership(const TypicalSetSpec& spec, std::span<const int> codims);

// Chebyshev choice of M: smallest M with Var / (M delta^2) <= failure.
int chebyshev_copies(const CertificateDistribution& dist, const Rational& slack,
                     const Rational& failure);

// Empirical probability that an i.i.d. M-tuple of cells is typical. The
// sampler is hand-rolled on top of mt19937_64 so runs are reproducible across
// platforms.
double aep_sample_check(const CertificateDistribution& dist, int copies,
                        const Rational& slack, int trials, std::uint64_t seed);

struct TypicalClaimsReport {
  std::uint64_t coefficient_set_size = 0;  // |B|
  bool size_bound_ok = false;              // |B| <= 2^(2M(aUC + delta))
  Rational residual_weight;                // Fourier weight outside B
  Rational atypical_mass;                  // probability of atypical tuples
  bool weight_bound_ok = false;            // residual <= atypical mass
  Rational auc;
  Rational delta;
  int copies = 0;
};

// Finite-M analogue of the typical-coefficient claims: builds the M-fold cell
// product, the typical tuple set, and the coefficient set B, then checks the
// size bound and the residual-weight bound exactly. delta must be dyadic;
// M * n <= 12.
TypicalClaimsReport verify_typical_coefficient_claims(const BooleanFunction& f,
                                                      const SubcubePartition& part,
                                                      int copies, const Rational& delta);

}  // namespace fet
