#include <doctest.h>

#include <cmath>
#include <random>

#include "fet/spectrum.hpp"

using namespace fet;

namespace {

// Independent transform oracle: O(4^n) summation straight off the definition.
std::vector<std::int64_t> naive_transform(const BooleanFunction& f) {
  std::vector<std::int64_t> out(f.table_size(), 0);
  for (std::uint64_t s = 0; s < f.table_size(); ++s) {
    for (std::uint64_t x = 0; x < f.table_size(); ++x) {
      int chi = parity_bit(x, s) ? -1 : 1;
      out[s] += f.value(x) * chi;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("wht agrees with the summation oracle") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      BooleanFunction f = BooleanFunction::random(n, rng());
      CHECK(wht(f).coeffs() == naive_transform(f));
    }
  }
}

TEST_CASE("wht frozen examples") {
  // Constant +1 on n=3: all weight at the empty set.
  FourierSpectrum c = wht(BooleanFunction::constant(3, +1));
  CHECK(c.coeff(0) == 8);
  for (std::uint64_t m = 1; m < 8; ++m) CHECK(c.coeff(m) == 0);

  // chi_{1,2} on n=2.
  FourierSpectrum p = wht(BooleanFunction::parity(2, 0b11));
  CHECK(p.coeff(0b11) == 4);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == 0);

  // AND_2, four-point summation done by hand: (2, 2, 2, -2).
  FourierSpectrum a = wht(BooleanFunction::and_all(2));
  CHECK(a.coeff(0) == 2);
  CHECK(a.coeff(1) == 2);
  CHECK(a.coeff(2) == 2);
  CHECK(a.coeff(3) == -2);
}

TEST_CASE("inverse_wht round trips exhaustively for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      BooleanFunction f = BooleanFunction::from_table_bits(n, bits);
      CHECK(inverse_wht(wht(f)) == f);
    }
  }
}

TEST_CASE("inverse_wht round trips on random functions up to n = 16") {
  std::mt19937_64 rng(11);
  for (int n : {8, 12, 16}) {
    for (int trial = 0; trial < 5; ++trial) {
      BooleanFunction f = BooleanFunction::random(n, rng());
      CHECK(inverse_wht(wht(f)) == f);
    }
  }
}

TEST_CASE("inverse_wht frozen examples and error case") {
  CHECK(inverse_wht(FourierSpectrum(2, {2, 2, 2, -2})) == BooleanFunction::and_all(2));
  CHECK(inverse_wht(FourierSpectrum(2, {4, 0, 0, 0})) == BooleanFunction::constant(2, +1));
  // Parseval holds but the points are not +-1.
  CHECK_THROWS_AS(inverse_wht(FourierSpectrum(2, {2, 2, 2, 2})), NotBooleanValued);
  // Parseval violated outright.
  CHECK_THROWS_AS(FourierSpectrum(2, {1, 0, 0, 0}), BadParams);
}

TEST_CASE("measures on the named examples") {
  SUBCASE("full parity: point-mass spectrum") {
    for (int n : {2, 3, 5}) {
      MeasureProfile m = measures(wht(BooleanFunction::parity(n, (1u << n) - 1)));
      CHECK(m.shannon_entropy == doctest::Approx(0).epsilon(1e-12));
      CHECK(m.min_entropy == doctest::Approx(0).epsilon(1e-12));
      CHECK(m.total_influence == doctest::Approx(n));
      CHECK(m.variance == doctest::Approx(1));
    }
  }
  SUBCASE("AND_2") {
    MeasureProfile m = measures(wht(BooleanFunction::and_all(2)));
    CHECK(m.shannon_entropy == doctest::Approx(2).epsilon(1e-12));
    CHECK(m.min_entropy == doctest::Approx(2).epsilon(1e-12));
    CHECK(m.total_influence == doctest::Approx(1));
    CHECK(m.variance == doctest::Approx(0.75));
    CHECK(m.spectral_norm == doctest::Approx(2));
    CHECK(m.degree == 2);
    CHECK(m.max_coeff_abs == doctest::Approx(0.5));
  }
  SUBCASE("MAJ_3") {
    MeasureProfile m = measures(wht(BooleanFunction::majority(3)));
    CHECK(m.shannon_entropy == doctest::Approx(2).epsilon(1e-12));
    CHECK(m.total_influence == doctest::Approx(1.5));
    for (double inf_i : m.per_coordinate_influence) {
      CHECK(inf_i == doctest::Approx(0.5));
    }
  }
}

TEST_CASE("constructors produce the expected spectra") {
  SUBCASE("majority on 3 variables is (x1 + x2 + x3 - x1 x2 x3) / 2") {
    FourierSpectrum s = wht(BooleanFunction::majority(3));
    CHECK(s.coeff(0b001) == 4);
    CHECK(s.coeff(0b010) == 4);
    CHECK(s.coeff(0b100) == 4);
    CHECK(s.coeff(0b111) == -4);
    CHECK(s.coeff(0) == 0);
  }
  SUBCASE("inner product on 4 variables is bent") {
    FourierSpectrum s = wht(BooleanFunction::inner_product(4));
    for (std::uint64_t m = 0; m < 16; ++m) {
      CHECK(std::abs(s.coeff(m)) == 4);  // |fhat| = 1/4 everywhere
    }
  }
  SUBCASE("dictator concentrates on its coordinate") {
    for (int n : {1, 3, 6}) {
      FourierSpectrum s = wht(BooleanFunction::dictator(n, 0));
      CHECK(s.coeff(1) == std::int64_t(1) << n);
      CHECK(s.support_size() == 1);
    }
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(BooleanFunction::majority(4), BadParams);
    CHECK_THROWS_AS(BooleanFunction::inner_product(3), BadParams);
    CHECK_THROWS_AS(BooleanFunction::dictator(3, 5), BadParams);
    CHECK_THROWS_AS(BooleanFunction::constant(3, 0), BadParams);
  }
}

TEST_CASE("tensor products") {
  BooleanFunction and2 = BooleanFunction::and_all(2);
  SUBCASE("tensor with the constant +1 preserves entropy") {
    BooleanFunction f = BooleanFunction::majority(3);
    BooleanFunction t = BooleanFunction::tensor(f, BooleanFunction::constant(2, +1));
    CHECK(shannon_entropy(wht(t)) ==
          doctest::Approx(shannon_entropy(wht(f))).epsilon(1e-12));
  }
  SUBCASE("AND_2 tensor AND_2 doubles the entropy") {
    BooleanFunction t = BooleanFunction::tensor(and2, and2);
    CHECK(shannon_entropy(wht(t)) == doctest::Approx(4).epsilon(1e-12));
  }
  SUBCASE("chi_1 tensor chi_1 is chi_{1,2}") {
    BooleanFunction t = BooleanFunction::tensor(BooleanFunction::parity(1, 1),
                                                BooleanFunction::parity(1, 1));
    CHECK(t == BooleanFunction::parity(2, 0b11));
  }
  SUBCASE("additivity of entropy, min-entropy and influence") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      BooleanFunction f = BooleanFunction::random(3, rng());
      BooleanFunction g = BooleanFunction::random(4, rng());
      FourierSpectrum sf = wht(f), sg = wht(g);
      FourierSpectrum st = wht(BooleanFunction::tensor(f, g));
      CHECK(shannon_entropy(st) ==
            doctest::Approx(shannon_entropy(sf) + shannon_entropy(sg)).epsilon(1e-9));
      CHECK(min_entropy(st) ==
            doctest::Approx(min_entropy(sf) + min_entropy(sg)).epsilon(1e-9));
      CHECK(sf.influence_exact() + sg.influence_exact() == st.influence_exact());
    }
  }
  SUBCASE("size cap") {
    BooleanFunction big(16), big2(16);
    CHECK_THROWS_AS(BooleanFunction::tensor(big, big2), SizeLimit);
  }
}

TEST_CASE("Parseval and granularity hold exhaustively for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      // Construction would throw on a Parseval violation.
      FourierSpectrum s = wht(BooleanFunction::from_table_bits(n, bits));
      CHECK(s.granularity_ok());
    }
  }
}

TEST_CASE("Renyi entropies order correctly and bound against min-entropy") {
  // H_inf <= H <= H_1/2 <= H_0, and H_{1+d} <= (1 + 1/d) H_inf, exhaustively
  // over n <= 3; the n = 4 sweep lives in the acceptance suite.
  for (int n = 1; n <= 3; ++n) {
    std::uint64_t total = std::uint64_t(1) << (std::uint64_t(1) << n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      FourierSpectrum s = wht(BooleanFunction::from_table_bits(n, bits));
      double h = shannon_entropy(s);
      double h_inf = min_entropy(s);
      CHECK(h_inf <= h + 1e-9);
      CHECK(h <= renyi_entropy(s, 0.5) + 1e-9);
      CHECK(renyi_entropy(s, 0.5) <= renyi_entropy(s, 0.0) + 1e-9);
      for (double delta : {0.5, 1.0, 2.0}) {
        CHECK(renyi_entropy(s, 1.0 + delta) <= (1.0 + 1.0 / delta) * h_inf + 1e-9);
      }
    }
  }
}

TEST_CASE("kkl ratio") {
  SUBCASE("MAJ_3 frozen values") {
    KklReport r = kkl_ratio(BooleanFunction::majority(3));
    CHECK(r.max_coordinate_influence == doctest::Approx(0.5));
    CHECK(r.log_term == doctest::Approx(1.0));
    CHECK(r.ratio == doctest::Approx(1.5));
    CHECK(!r.sentinel);
  }
  SUBCASE("dictator and full parity hit the sentinel") {
    CHECK(kkl_ratio(BooleanFunction::dictator(3, 1)).sentinel);
    CHECK(kkl_ratio(BooleanFunction::parity(2, 0b11)).sentinel);
  }
  SUBCASE("constant functions are rejected") {
    CHECK_THROWS_AS(kkl_ratio(BooleanFunction::constant(3, +1)), ConstantFunction);
  }
}

TEST_CASE("truth table text round trip") {
  std::mt19937_64 rng(99);
  for (int n : {1, 2, 3, 6, 7, 9}) {
    BooleanFunction f = BooleanFunction::random(n, rng());
    CHECK(BooleanFunction::from_text(f.to_text()) == f);
  }
  // Binary and hex forms of the same function parse identically: AND_2 is
  // TRUE only at index 3, so its table reads "0001" and packs to hex "8".
  BooleanFunction andf = BooleanFunction::and_all(2);
  CHECK(BooleanFunction::from_text("n=2\n0001") == andf);
  CHECK(BooleanFunction::from_text("n=2\n8") == andf);
  CHECK_THROWS_AS(BooleanFunction::from_text("n=2\n10"), ParseError);
  CHECK_THROWS_AS(BooleanFunction::from_text("m=2\n0001"), ParseError);
}
