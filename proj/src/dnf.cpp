#include "fet/dnf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "fet/certificates.hpp"
#include "fet/spectrum.hpp"

namespace fet {

int DnfFormula::read_multiplicity() const {
  std::map<int, int> counts;
  for (const auto& term : terms) {
    for (const auto& lit : term) ++counts[lit.var];
  }
  int k = 0;
  for (const auto& [var, c] : counts) k = std::max(k, c);
  return k;
}

int DnfFormula::min_term_size() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& term : terms) m = std::min(m, static_cast<int>(term.size()));
  return m;
}

std::string DnfFormula::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) os << " | ";
    os << '(';
    for (std::size_t l = 0; l < terms[t].size(); ++l) {
      if (l) os << " & ";
      if (terms[t][l].negated) os << '!';
      os << 'x' << (terms[t][l].var + 1);
    }
    os << ')';
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

Literal parse_literal(Cursor& cur) {
  Literal lit;
  lit.negated = cur.accept('!');
  cur.skip_space();
  if (!cur.accept('x')) throw ParseError("expected variable x<int>", cur.pos);
  std::size_t start = cur.pos;
  long value = 0;
  while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
    value = value * 10 + (cur.text[cur.pos] - '0');
    if (value > caps::kMaxVars) throw ParseError("variable index too large", start);
    ++cur.pos;
  }
  if (cur.pos == start) throw ParseError("expected variable index", cur.pos);
  if (value < 1) throw ParseError("variable indices are 1-based", start);
  lit.var = static_cast<int>(value - 1);
  return lit;
}

std::vector<Literal> parse_term(Cursor& cur) {
  bool wrapped = cur.accept('(');
  std::vector<Literal> term;
  term.push_back(parse_literal(cur));
  while (cur.accept('&')) term.push_back(parse_literal(cur));
  if (wrapped && !cur.accept(')')) throw ParseError("expected ')'", cur.pos);
  for (std::size_t i = 0; i < term.size(); ++i) {
    for (std::size_t j = i + 1; j < term.size(); ++j) {
      if (term[i].var == term[j].var) {
        throw DuplicateLiteral("variable x" + std::to_string(term[i].var + 1) +
                               " appears twice in a term");
      }
    }
  }
  return term;
}

}  // namespace

DnfFormula parse_dnf(const std::string& text) {
  Cursor cur{text};
  DnfFormula d;
  d.terms.push_back(parse_term(cur));
  while (cur.accept('|')) d.terms.push_back(parse_term(cur));
  if (!cur.done()) throw ParseError("trailing input after formula", cur.pos);
  for (const auto& term : d.terms) {
    for (const auto& lit : term) d.n = std::max(d.n, lit.var + 1);
  }
  return d;
}

BooleanFunction compile(const DnfFormula& d) {
  if (d.n > caps::kMaxVars) throw SizeLimit("DNF exceeds the variable cap");
  if (d.terms.empty()) throw BadParams("DNF needs at least one term");
  BooleanFunction f(d.n, +1);
  for (std::uint64_t x = 0; x < f.table_size(); ++x) {
    for (const auto& term : d.terms) {
      bool satisfied = true;
      for (const auto& lit : term) {
        bool var_true = (x >> lit.var) & 1;  // bit set <-> x_var = -1 = TRUE
        if (var_true == lit.negated) {
          satisfied = false;
          break;
        }
      }
      if (satisfied) {
        f.set_value(x, -1);
        break;
      }
    }
  }
  return f;
}

ReadkInfluenceReport verify_readk_influence_bound(const DnfFormula& d) {
  ReadkInfluenceReport r;
  r.read_k = d.read_multiplicity();
  BooleanFunction f = compile(d);
  FourierSpectrum s = wht(f);
  CertificateReport certs = certificate_aggregates(f);
  r.c_min = certs.c_min;
  r.total_influence = s.influence_exact();
  // k * 2^-(c_min - 1); c_min = 0 makes the bound 2k.
  r.per_coordinate_bound = r.c_min >= 1
                               ? Rational::dyadic(r.read_k, r.c_min - 1)
                               : Rational(2 * r.read_k);
  r.holds = true;
  r.per_coordinate.reserve(f.n());
  for (int i = 0; i < f.n(); ++i) {
    r.per_coordinate.push_back(s.coordinate_influence_exact(i));
    if (r.per_coordinate.back() > r.per_coordinate_bound) r.holds = false;
  }
  double denom = s.variance_exact().to_double() *
                 (r.c_min - 1 - std::log2(static_cast<double>(r.read_k)));
  r.kkl_style_ratio = denom > 0 ? r.total_influence.to_double() / denom
                                : std::numeric_limits<double>::quiet_NaN();
  return r;
}

FmeiReadkReport verify_fmei_readk(const DnfFormula& d) {
  FmeiReadkReport r;
  r.read_k = d.read_multiplicity();
  BooleanFunction f = compile(d);
  FourierSpectrum s = wht(f);
  r.min_entropy = min_entropy(s);
  r.total_influence = s.influence_exact();
  double inf = r.total_influence.to_double();
  r.ratio = inf > 0 ? r.min_entropy / inf : 0.0;
  CertificateReport certs = certificate_aggregates(f);
  r.c_min = certs.c_min;
  r.c_min_parity = min_parity_certificate(f);
  r.chain_holds = r.min_entropy <= 2.0 * r.c_min_parity + 1e-9 &&
                  r.c_min_parity <= r.c_min;
  r.reference_bound = 4.0 + 4.0 * (1.0 + std::log2(static_cast<double>(r.read_k)));
  return r;
}

MansourResult mansour_approximate(const DnfFormula& d, double eps,
                                  std::optional<double> delta1_opt,
                                  std::optional<double> delta2_opt) {
  if (d.n > caps::kMansourMaxVars) {
    throw SizeLimit("Mansour approximation capped at n <= " +
                    std::to_string(caps::kMansourMaxVars));
  }
  if (!(eps > 0 && eps < 1)) throw BadParams("eps must lie in (0, 1)");
  MansourResult r(d.n);
  r.delta1 = delta1_opt.value_or(eps / 4);
  r.delta2 = delta2_opt.value_or(eps / 4);
  if (r.delta1 <= 0 || r.delta2 <= 0) throw BadParams("deltas must be positive");

  // Drop terms longer than ceil(log2(4t / delta1)); dropping fewer only helps.
  int t = d.term_count();
  double raw = std::log2(4.0 * t / r.delta1);
  int cutoff = static_cast<int>(std::ceil(raw - 1e-12));
  r.g_formula.n = d.n;
  for (const auto& term : d.terms) {
    if (static_cast<int>(term.size()) <= cutoff) {
      r.g_formula.terms.push_back(term);
    } else {
      ++r.terms_dropped;
    }
  }
  if (r.g_formula.terms.empty()) {
    r.g = BooleanFunction(d.n, +1);  // empty disjunction is FALSE
  } else {
    r.g = compile(r.g_formula);
  }

  BooleanFunction f = compile(d);
  FourierSpectrum fs = wht(f);
  FourierSpectrum gs = wht(r.g);
  r.entropy_g = shannon_entropy(gs);

  // E[(f-g)^2] = sum (fhat - ghat)^2, exact dyadic arithmetic.
  {
    __int128 acc = 0;
    for (std::uint64_t mask = 0; mask < fs.size(); ++mask) {
      __int128 diff = fs.coeff(mask) - gs.coeff(mask);
      acc += diff * diff;
    }
    r.fg_error = Rational(acc, static_cast<__int128>(1) << (2 * d.n));
  }

  // Threshold ghat at 2^(-H/(2 delta2)); point-mass spectra keep g verbatim.
  r.approximant = SparsePolynomial(d.n);
  if (r.entropy_g <= 0) {
    r.threshold = 1.0;
    for (std::uint64_t mask = 0; mask < gs.size(); ++mask) {
      if (gs.coeff(mask) != 0) {
        r.approximant.set_coeff(mask, gs.fhat(mask));
      }
    }
  } else {
    double exponent = r.entropy_g / (2.0 * r.delta2);
    r.threshold = std::exp2(-exponent);
    // |ghat| >= theta decided in log space: log2|c| - n >= -H/(2 delta2).
    for (std::uint64_t mask = 0; mask < gs.size(); ++mask) {
      std::int64_t c = gs.coeff(mask);
      if (c == 0) continue;
      double log_abs = std::log2(std::fabs(static_cast<double>(c))) - d.n;
      if (log_abs >= -exponent) {
        r.approximant.set_coeff(mask, gs.fhat(mask));
      }
    }
  }
  r.sparsity = r.approximant.sparsity();

  // E[(f-p)^2] = sum over kept (fhat - ghat)^2 + sum over dropped fhat^2.
  {
    __int128 acc = 0;
    for (std::uint64_t mask = 0; mask < fs.size(); ++mask) {
      bool kept = r.approximant.coeff(mask) != 0.0;
      __int128 diff = kept ? fs.coeff(mask) - gs.coeff(mask)
                           : static_cast<__int128>(fs.coeff(mask));
      acc += diff * diff;
    }
    r.error = Rational(acc, static_cast<__int128>(1) << (2 * d.n));
  }
  double sqrt_budget = std::sqrt(r.delta1) + std::sqrt(r.delta2);
  r.budget = sqrt_budget * sqrt_budget;
  if (r.error.to_double() > r.budget + 1e-12) {
    throw InternalError("Mansour error bound violated");
  }
  return r;
}

}  // namespace fet
