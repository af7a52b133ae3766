#include "fet/certificates.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fet {

namespace {

void check_parity_cap(int n) {
  if (n > caps::kParityCertMaxVars) {
    throw SizeLimit("parity certificates are capped at n <= " +
                    std::to_string(caps::kParityCertMaxVars));
  }
}

// Lexicographically-first size-m coordinate set containing `mandatory` whose
// mask hits every diff in `diffs`; ~0 if none.
std::uint64_t first_hitting_set(int n, int m, std::uint64_t mandatory,
                                const std::vector<std::uint64_t>& diffs) {
  std::vector<int> combo(m);
  for (int i = 0; i < m; ++i) combo[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int c : combo) mask |= std::uint64_t(1) << c;
    if ((mask & mandatory) == mandatory) {
      bool ok = true;
      for (std::uint64_t d : diffs) {
        if (!(d & mask)) {
          ok = false;
          break;
        }
      }
      if (ok) return mask;
    }
    int i = m - 1;
    while (i >= 0 && combo[i] == n - m + i) --i;
    if (i < 0) return ~std::uint64_t(0);
    ++combo[i];
    for (int j = i + 1; j < m; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace

SensitivityReport sensitivity(const BooleanFunction& f) {
  SensitivityReport r;
  r.per_input.resize(f.table_size());
  std::int64_t total = 0;
  for (std::uint64_t x = 0; x < f.table_size(); ++x) {
    int v = f.value(x);
    int s = 0;
    for (int i = 0; i < f.n(); ++i) {
      s += f.value(x ^ (std::uint64_t(1) << i)) != v;
    }
    r.per_input[x] = s;
    total += s;
    r.max_sensitivity = std::max(r.max_sensitivity, s);
  }
  r.average = Rational::dyadic(total, f.n());
  return r;
}

CertificateWitness certificate(const BooleanFunction& f, std::uint64_t x) {
  int v = f.value(x);
  std::vector<std::uint64_t> diffs;
  std::uint64_t mandatory = 0;
  for (std::uint64_t y = 0; y < f.table_size(); ++y) {
    if (f.value(y) != v) {
      std::uint64_t d = x ^ y;
      diffs.push_back(d);
      if (popcount(d) == 1) mandatory |= d;
    }
  }
  CertificateWitness w;
  if (diffs.empty()) {
    w.assignment = PartialAssignment(f.n(), 0, 0);
    return w;  // constant function: C = 0
  }
  for (int m = std::max(1, popcount(mandatory)); m <= f.n(); ++m) {
    std::uint64_t mask = first_hitting_set(f.n(), m, mandatory, diffs);
    if (mask != ~std::uint64_t(0)) {
      w.size = m;
      w.assignment = PartialAssignment(f.n(), mask, x & mask);
      return w;
    }
  }
  throw InternalError("certificate search fell through");
}

namespace {

// Shared driver: walks RREF row spaces by ascending co-dimension and hands
// every monochromatic coset (rows with signs chosen per contained input) to
// the sink. Sink returns true to stop the whole walk.
bool walk_monochromatic_cosets(
    const BooleanFunction& f, int k,
    const std::function<bool(const std::vector<std::uint64_t>&, std::uint64_t)>& sink) {
  bool stop = false;
  std::vector<int> sig_value;
  std::vector<std::uint64_t> sig_seen;
  enumerate_rref_rowspaces(f.n(), k, [&](const std::vector<std::uint64_t>& rows) {
    if (stop) return;
    std::uint64_t buckets = std::uint64_t(1) << k;
    sig_value.assign(buckets, 0);  // 0 unseen, else +-1 if mono so far, 2 if mixed
    sig_seen.assign(buckets, 0);
    for (std::uint64_t x = 0; x < f.table_size(); ++x) {
      std::uint64_t sig = 0;
      for (int j = 0; j < k; ++j) {
        sig |= std::uint64_t(parity_bit(x, rows[j])) << j;
      }
      int v = f.value(x);
      if (sig_seen[sig] == 0) {
        sig_value[sig] = v;
        sig_seen[sig] = x + 1;  // remember one representative (offset by 1)
      } else if (sig_value[sig] != v) {
        sig_value[sig] = 2;
      }
    }
    for (std::uint64_t sig = 0; sig < buckets && !stop; ++sig) {
      if (sig_seen[sig] != 0 && sig_value[sig] != 2) {
        stop = sink(rows, sig_seen[sig] - 1);
      }
    }
  });
  return stop;
}

ParityCertificateWitness witness_from_rows(const BooleanFunction& f,
                                           const std::vector<std::uint64_t>& rows,
                                           std::uint64_t x) {
  AffineConstraintSystem sys(f.n());
  for (std::uint64_t mask : rows) {
    sys.add_constraint(mask, parity_bit(x, mask) ? -1 : +1);
  }
  return {static_cast<int>(rows.size()), sys};
}

}  // namespace

ParityCertificateWitness parity_certificate(const BooleanFunction& f, std::uint64_t x) {
  check_parity_cap(f.n());
  for (int k = 0; k <= f.n(); ++k) {
    ParityCertificateWitness found{0, AffineConstraintSystem(f.n())};
    bool hit = walk_monochromatic_cosets(
        f, k, [&](const std::vector<std::uint64_t>& rows, std::uint64_t) {
          AffineConstraintSystem sys(f.n());
          for (std::uint64_t mask : rows) {
            sys.add_constraint(mask, parity_bit(x, mask) ? -1 : +1);
          }
          // Need the coset through x itself to be monochromatic.
          int v = f.value(x);
          for (std::uint64_t y = 0; y < f.table_size(); ++y) {
            if (sys.contains(y) && f.value(y) != v) return false;
          }
          found = {k, sys};
          return true;
        });
    if (k == 0) {
      // Co-dim 0 means the whole cube; only constants qualify.
      if (f.is_constant()) return {0, AffineConstraintSystem(f.n())};
      continue;
    }
    if (hit) return found;
  }
  throw InternalError("parity certificate search fell through");
}

std::vector<int> parity_certificates_all(const BooleanFunction& f) {
  check_parity_cap(f.n());
  std::vector<int> out(f.table_size(), -1);
  std::uint64_t remaining = f.table_size();
  if (f.is_constant()) {
    std::fill(out.begin(), out.end(), 0);
    return out;
  }
  for (int k = 1; k <= f.n() && remaining > 0; ++k) {
    enumerate_rref_rowspaces(f.n(), k, [&](const std::vector<std::uint64_t>& rows) {
      if (remaining == 0) return;
      std::uint64_t buckets = std::uint64_t(1) << k;
      // First pass: which cosets are monochromatic.
      std::vector<signed char> value(buckets, 0);
      for (std::uint64_t x = 0; x < f.table_size(); ++x) {
        std::uint64_t sig = 0;
        for (int j = 0; j < k; ++j) {
          sig |= std::uint64_t(parity_bit(x, rows[j])) << j;
        }
        int v = f.value(x);
        if (value[sig] == 0) {
          value[sig] = static_cast<signed char>(v);
        } else if (value[sig] != v) {
          value[sig] = 2;
        }
      }
      // Second pass: settle still-open inputs inside monochromatic cosets.
      for (std::uint64_t x = 0; x < f.table_size(); ++x) {
        if (out[x] != -1) continue;
        std::uint64_t sig = 0;
        for (int j = 0; j < k; ++j) {
          sig |= std::uint64_t(parity_bit(x, rows[j])) << j;
        }
        if (value[sig] != 2) {
          out[x] = k;
          --remaining;
        }
      }
    });
  }
  if (remaining > 0) throw InternalError("parity certificate sweep incomplete");
  return out;
}

int min_parity_certificate(const BooleanFunction& f) {
  check_parity_cap(f.n());
  if (f.is_constant()) return 0;
  for (int k = 1; k <= f.n(); ++k) {
    if (walk_monochromatic_cosets(
            f, k, [](const std::vector<std::uint64_t>&, std::uint64_t) { return true; })) {
      return k;
    }
  }
  throw InternalError("min parity certificate fell through");
}

namespace {

// Bulk per-input certificate sizes via a scan over all 3^n subcubes; n <= 6 so
// point sets fit one machine word.
std::vector<int> certificates_bulk_small(const BooleanFunction& f) {
  int n = f.n();
  std::uint64_t size = f.table_size();
  std::uint64_t ones = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (f.bit(x)) ones |= std::uint64_t(1) << x;
  }
  std::uint64_t all = size == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << size) - 1;
  std::vector<int> best(size, n + 1);
  for (std::uint64_t fixed = 0; fixed < (std::uint64_t(1) << n); ++fixed) {
    int codim = popcount(fixed);
    std::uint64_t free_mask = ~fixed & ((std::uint64_t(1) << n) - 1);
    // One subcube per assignment of the fixed coordinates.
    std::uint64_t assign = 0;
    while (true) {
      // Collect the subcube's points.
      std::uint64_t pts = 0;
      std::uint64_t sub = 0;
      while (true) {
        pts |= std::uint64_t(1) << (assign | sub);
        if (sub == free_mask) break;
        sub = (sub - free_mask) & free_mask;
      }
      std::uint64_t inside = pts & ones;
      if (inside == 0 || inside == (pts & all)) {
        for (std::uint64_t x = 0; x < size; ++x) {
          if ((pts >> x) & 1) best[x] = std::min(best[x], codim);
        }
      }
      if (assign == fixed) break;
      assign = (assign - fixed) & fixed;
    }
  }
  return best;
}

}  // namespace

CertificateReport certificate_aggregates(const BooleanFunction& f) {
  CertificateReport r;
  std::uint64_t size = f.table_size();
  if (f.n() <= 6) {
    r.per_input = certificates_bulk_small(f);
  } else {
    r.per_input.resize(size);
    for (std::uint64_t x = 0; x < size; ++x) {
      r.per_input[x] = certificate(f, x).size;
    }
  }
  r.c_min = *std::min_element(r.per_input.begin(), r.per_input.end());
  std::int64_t total = 0;
  for (std::uint64_t x = 0; x < size; ++x) {
    int c = r.per_input[x];
    total += c;
    r.c = std::max(r.c, c);
    if (f.value(x) == +1) {
      r.c0 = std::max(r.c0, c);
    } else {
      r.c1 = std::max(r.c1, c);
    }
  }
  r.average = Rational::dyadic(total, f.n());
  r.sens = sensitivity(f);
  if (f.n() <= caps::kParityCertMaxVars) {
    ParityAggregates p;
    p.per_input = parity_certificates_all(f);
    p.c_parity = *std::max_element(p.per_input.begin(), p.per_input.end());
    p.c_parity_min = *std::min_element(p.per_input.begin(), p.per_input.end());
    r.parity = std::move(p);
  }
  return r;
}

SubspaceWitnessReport subspace_fourier_witness(const BooleanFunction& f,
                                               const AffineConstraintSystem& h) {
  if (h.n() != f.n()) throw BadParams("function and subspace sizes differ");
  // f must be constant on h; normalize to the value -1 (negate if needed).
  auto pts = h.points();
  int v = f.value(pts[0]);
  for (std::uint64_t p : pts) {
    if (f.value(p) != v) {
      throw NotMonochromatic("function is not constant on the subspace");
    }
  }
  SubspaceWitnessReport r;
  r.negated = (v == +1);
  FourierSpectrum s = wht(r.negated ? f.negated() : f);

  int k = h.codim();
  const auto& rows = h.rows();
  // Expand the AND-of-parities indicator: T ranges over subsets of the rows,
  // the character mask is the XOR of the chosen rows, and the indicator's
  // coefficient there is -prod(signs) * 2^(1-k). Linear independence keeps
  // the 2^k masks distinct. Equating the counting and Parseval forms of
  // <f, 1_H> gives, scaled by 2^n:  2^n = -c(0) - sum_{T != 0} prod(b) c(T).
  __int128 relation = 0;
  std::int64_t max_abs = 0;
  __int128 sum_abs = 0;
  r.support.reserve(std::uint64_t(1) << k);
  for (std::uint64_t t = 0; t < (std::uint64_t(1) << k); ++t) {
    std::uint64_t mask = 0;
    int sign = +1;
    for (int j = 0; j < k; ++j) {
      if (t >> j & 1) {
        mask ^= rows[j].mask;
        sign *= rows[j].sign;
      }
    }
    r.support.push_back(mask);
    std::int64_t c = s.coeff(mask);
    relation -= t == 0 ? static_cast<__int128>(c) : static_cast<__int128>(sign) * c;
    max_abs = std::max(max_abs, std::abs(c));
    sum_abs += std::abs(c);
  }
  std::sort(r.support.begin(), r.support.end());
  r.support.erase(std::unique(r.support.begin(), r.support.end()), r.support.end());
  if (r.support.size() != (std::uint64_t(1) << k)) {
    throw InternalError("subspace character masks collided");
  }
  r.max_abs_coeff = Rational::dyadic(max_abs, f.n());
  r.sum_abs = Rational(sum_abs, static_cast<__int128>(1) << f.n());
  // Eq. relation: 2^n = -c(0) + sum sign * c(mask), exactly.
  r.linear_relation_ok = (relation == (static_cast<__int128>(1) << f.n()));
  r.max_bound_ok = r.max_abs_coeff * Rational(std::int64_t(1) << k) >= Rational(1);
  return r;
}

FmeiBoundReport verify_fmei_bound(const BooleanFunction& f) {
  FmeiBoundReport r;
  r.min_entropy = min_entropy(wht(f));
  r.c_parity_min = min_parity_certificate(f);
  r.holds = r.min_entropy <= 2.0 * r.c_parity_min + 1e-9;
  return r;
}

}  // namespace fet
