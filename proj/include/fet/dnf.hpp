#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fet/boolean_function.hpp"
#include "fet/rational.hpp"
#include "fet/sparse_polynomial.hpp"

namespace fet {

// One literal: variable index (0-based) and polarity. A positive literal is
// satisfied when the variable is TRUE (= -1); "!" flips that.
struct Literal {
  int var = 0;
  bool negated = false;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.var == b.var && a.negated == b.negated;
  }
};

struct DnfFormula {
  int n = 0;                                // variable count (max index seen)
  std::vector<std::vector<Literal>> terms;  // t >= 1, no duplicate variable per term

  int term_count() const { return static_cast<int>(terms.size()); }
  int read_multiplicity() const;  // max over variables of #terms containing it
  int min_term_size() const;
  std::string to_string() const;  // "(x1 & !x2) | (x3)"
};

// Grammar: terms separated by '|', literals by '&', negation '!', variables
// x<int> (1-based), optional parentheses around terms, whitespace free.
DnfFormula parse_dnf(const std::string& text);

// Truth table under TRUE = -1: a satisfied term drives the output to -1.
BooleanFunction compile(const DnfFormula& d);

struct ReadkInfluenceReport {
  Rational total_influence;
  int c_min = 0;
  Rational per_coordinate_bound;          // k * 2^-(c_min - 1)
  std::vector<Rational> per_coordinate;   // Inf_i(f)
  bool holds = false;                     // every Inf_i <= bound, exactly
  double kkl_style_ratio = 0;             // Inf / (Var (c_min - 1 - log2 k)); NaN if <= 0
  int read_k = 0;
};

// The unconditional half of the read-k influence lemma, checked exactly.
ReadkInfluenceReport verify_readk_influence_bound(const DnfFormula& d);

struct FmeiReadkReport {
  double min_entropy = 0;
  Rational total_influence;
  double ratio = 0;  // H_inf / Inf; 0 for constants
  int read_k = 0;
  int c_min = 0;
  int c_min_parity = 0;
  bool chain_holds = false;     // H_inf <= 2 C_min_parity <= 2 C_min
  double reference_bound = 0;   // 4 + 4 (1 + log2 k), unit-constant reference
};

FmeiReadkReport verify_fmei_readk(const DnfFormula& d);

struct MansourResult {
  explicit MansourResult(int n) : g(n, +1), approximant(n) {}

  DnfFormula g_formula;        // after dropping long terms
  BooleanFunction g;
  int terms_dropped = 0;
  double entropy_g = 0;        // H(ghat^2)
  double threshold = 0;        // 2^(-H / (2 delta2)), or 1 when H = 0
  SparsePolynomial approximant;
  std::uint64_t sparsity = 0;
  Rational error;              // E[(f - p)^2], exact
  Rational fg_error;           // E[(f - g)^2], exact
  double budget = 0;           // (sqrt(delta1) + sqrt(delta2))^2
  double delta1 = 0;
  double delta2 = 0;
};

// Constructive sparse approximation: drop terms longer than log2(4t/delta1)
// (ceiling), threshold the spectrum of the remainder at 2^(-H/(2 delta2)).
// Defaults delta1 = delta2 = eps/4. n <= 16, 0 < eps < 1.
MansourResult mansour_approximate(const DnfFormula& d, double eps,
                                  std::optional<double> delta1 = std::nullopt,
                                  std::optional<double> delta2 = std::nullopt);

}  // namespace fet
