#include <doctest.h>

#include <random>

#include "fet/aep.hpp"
#include "fet/spectrum.hpp"

using namespace fet;

namespace {

SubcubePartition and2_three_cells() {
  SubcubePartition p;
  p.n = 2;
  p.cells = {PartialAssignment(2, 0b01, 0b00), PartialAssignment(2, 0b11, 0b01),
             PartialAssignment(2, 0b11, 0b11)};
  p.cell_values = {+1, +1, -1};
  return p;
}

}  // namespace

TEST_CASE("certificate distribution entropy equals aUC exactly") {
  BooleanFunction f = BooleanFunction::and_all(2);
  SubcubePartition part = and2_three_cells();
  CertificateDistribution dist = CertificateDistribution::from_partition(part);
  CHECK(dist.total_measure() == Rational(1));
  CHECK(dist.entropy() == verify_partition(f, part));
  CHECK(dist.entropy() == Rational(3, 2));
  CHECK(dist.variance() == Rational(1, 4));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    BooleanFunction g = BooleanFunction::random(4, rng());
    SubcubePartition p = heuristic_subcube_partition(g);
    CHECK(CertificateDistribution::from_partition(p).entropy() == verify_partition(g, p));
  }
}

TEST_CASE("typical membership is exact rational arithmetic") {
  TypicalSetSpec spec{4, Rational(3, 10), Rational(3, 2)};
  std::vector<int> tuple{1, 2, 2, 1};
  CHECK(typical_membership(spec, tuple));  // mean exactly 3/2

  TypicalSetSpec tight{2, Rational(1, 10), Rational(3, 2)};
  std::vector<int> off{2, 2};
  CHECK(!typical_membership(tight, off));  // mean 2, slack 0.1

  TypicalSetSpec zero{5, Rational(0), Rational(1)};
  std::vector<int> ones{1, 1, 1, 1, 1};
  CHECK(typical_membership(zero, ones));

  std::vector<int> wrong{1, 1};
  CHECK_THROWS_AS(typical_membership(zero, wrong), BadParams);
}

TEST_CASE("aep sampling") {
  SUBCASE("point mass is always typical") {
    CertificateDistribution point{{0}};
    CHECK(aep_sample_check(point, 8, Rational(0), 500, 1) == 1.0);
  }
  SUBCASE("AND_2 distribution at M = 64 concentrates") {
    CertificateDistribution dist{{1, 2, 2}};
    double fraction = aep_sample_check(dist, 64, Rational(1, 2), 10000, 42);
    CHECK(fraction >= 0.95);
  }
  SUBCASE("zero slack at M = 1 only accepts codims equal to the entropy") {
    CertificateDistribution dist{{1, 2, 2}};  // entropy 3/2, never hit by one draw
    CHECK(aep_sample_check(dist, 1, Rational(0), 2000, 7) == 0.0);
  }
  SUBCASE("Chebyshev rule") {
    CertificateDistribution dist{{1, 2, 2}};
    // Var = 1/4: M >= (1/4) / (delta^2 failure).
    CHECK(chebyshev_copies(dist, Rational(1, 2), Rational(1, 2)) == 2);
    CHECK(chebyshev_copies(dist, Rational(1, 2), Rational(1, 4)) == 4);
    CertificateDistribution point{{3}};
    CHECK(chebyshev_copies(point, Rational(1, 100), Rational(1, 100)) == 1);
  }
  SUBCASE("sampling is reproducible for a fixed seed") {
    CertificateDistribution dist{{1, 2, 3, 3}};
    double a = aep_sample_check(dist, 16, Rational(1, 4), 5000, 99);
    double b = aep_sample_check(dist, 16, Rational(1, 4), 5000, 99);
    CHECK(a == b);
  }
}

TEST_CASE("typical coefficient claims") {
  SUBCASE("constant function: a single all-empty tuple carries all weight") {
    BooleanFunction f = BooleanFunction::constant(2, +1);
    SubcubePartition p;
    p.n = 2;
    p.cells = {PartialAssignment(2, 0, 0)};
    p.cell_values = {+1};
    for (int m : {1, 2, 3}) {
      TypicalClaimsReport r = verify_typical_coefficient_claims(f, p, m, Rational(0));
      CHECK(r.coefficient_set_size == 1);
      CHECK(r.residual_weight == Rational(0));
      CHECK(r.atypical_mass == Rational(0));
      CHECK(r.size_bound_ok);
      CHECK(r.weight_bound_ok);
    }
  }
  SUBCASE("AND_2 three-cell partition at M = 2, delta = 1/2") {
    TypicalClaimsReport r = verify_typical_coefficient_claims(
        BooleanFunction::and_all(2), and2_three_cells(), 2, Rational(1, 2));
    CHECK(r.size_bound_ok);
    CHECK(r.weight_bound_ok);
    CHECK(r.auc == Rational(3, 2));
    // Typical tuples at M=2 need mean codim in [1, 2]: all nine cell pairs
    // qualify, so every coefficient is covered and nothing is left outside.
    CHECK(r.atypical_mass == Rational(0));
    CHECK(r.residual_weight == Rational(0));
  }
  SUBCASE("AND_2 at M = 2, delta = 0 leaves exactly the atypical corners") {
    TypicalClaimsReport r = verify_typical_coefficient_claims(
        BooleanFunction::and_all(2), and2_three_cells(), 2, Rational(0));
    // Typical pairs have codim sum exactly 3: the (1,2) and (2,1) mixes.
    CHECK(r.atypical_mass == Rational(1, 2));  // (1,1) mass 1/4 + four (2,2) pairs 1/16 each
    CHECK(r.weight_bound_ok);
    CHECK(r.size_bound_ok);
    CHECK(r.residual_weight <= r.atypical_mass);
  }
  SUBCASE("full parity with singleton cells at M = 1, delta = 0 covers everything") {
    BooleanFunction f = BooleanFunction::parity(2, 0b11);
    SubcubePartition p;
    p.n = 2;
    for (std::uint64_t x = 0; x < 4; ++x) {
      p.cells.push_back(PartialAssignment(2, 0b11, x));
      p.cell_values.push_back(f.value(x));
    }
    TypicalClaimsReport r = verify_typical_coefficient_claims(f, p, 1, Rational(0));
    CHECK(r.coefficient_set_size == 4);
    CHECK(r.residual_weight == Rational(0));
    CHECK(r.atypical_mass == Rational(0));
    CHECK(r.size_bound_ok);
    CHECK(r.weight_bound_ok);
  }
  SUBCASE("residual weight matches a direct tensor-spectrum oracle") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      BooleanFunction f = BooleanFunction::random(2, rng());
      SubcubePartition p = min_auc_exact(f).partition;
      int copies = 2;
      TypicalClaimsReport r = verify_typical_coefficient_claims(f, p, copies, Rational(0));
      // Oracle: rebuild the coefficient set from scratch and weigh the
      // complement with the full WHT of the tensor power.
      BooleanFunction fm = BooleanFunction::tensor(f, f);
      FourierSpectrum sm = wht(fm);
      TypicalSetSpec spec{copies, Rational(0), verify_partition(f, p)};
      std::vector<bool> in_b(sm.size(), false);
      for (std::size_t i = 0; i < p.cells.size(); ++i) {
        for (std::size_t j = 0; j < p.cells.size(); ++j) {
          std::vector<int> codims{p.cells[i].codim(), p.cells[j].codim()};
          if (!typical_membership(spec, codims)) continue;
          std::uint64_t all = p.cells[i].fixed_mask | (p.cells[j].fixed_mask << 2);
          std::uint64_t sub = 0;
          while (true) {
            in_b[sub] = true;
            if (sub == all) break;
            sub = (sub - all) & all;
          }
        }
      }
      Rational residual(0);
      for (std::uint64_t mask = 0; mask < sm.size(); ++mask) {
        if (!in_b[mask]) residual += sm.weight_exact(mask);
      }
      CHECK(residual == r.residual_weight);
    }
  }
  SUBCASE("caps and parameter validation") {
    BooleanFunction f = BooleanFunction::and_all(2);
    SubcubePartition p = and2_three_cells();
    CHECK_THROWS_AS(verify_typical_coefficient_claims(f, p, 7, Rational(0)), SizeLimit);
    CHECK_THROWS_AS(verify_typical_coefficient_claims(f, p, 2, Rational(1, 3)), BadParams);
  }
}
