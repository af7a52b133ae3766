#include "fet/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fet {

FourierSpectrum::FourierSpectrum(int n, std::vector<std::int64_t> scaled_coeffs)
    : n_(n), coeffs_(std::move(scaled_coeffs)) {
  if (n < 1 || n > caps::kMaxVars) throw SizeLimit("spectrum variable count outside cap");
  if (coeffs_.size() != size()) throw BadParams("spectrum length must be 2^n");
  // Parseval: sum c^2 = 4^n. 128-bit accumulation; n <= 24 keeps this exact.
  __int128 sum = 0;
  for (std::int64_t c : coeffs_) sum += static_cast<__int128>(c) * c;
  if (sum != (static_cast<__int128>(1) << (2 * n_))) {
    throw BadParams("spectrum violates Parseval");
  }
}

double FourierSpectrum::fhat(std::uint64_t mask) const {
  return std::ldexp(static_cast<double>(coeffs_[mask]), -n_);
}

Rational FourierSpectrum::fhat_exact(std::uint64_t mask) const {
  return Rational::dyadic(coeffs_[mask], n_);
}

int FourierSpectrum::degree() const {
  int deg = 0;
  for (std::uint64_t s = 0; s < size(); ++s) {
    if (coeffs_[s] != 0) deg = std::max(deg, popcount(s));
  }
  return deg;
}

std::uint64_t FourierSpectrum::support_size() const {
  std::uint64_t count = 0;
  for (std::int64_t c : coeffs_) count += (c != 0);
  return count;
}

std::int64_t FourierSpectrum::max_abs_coeff() const {
  std::int64_t best = 0;
  for (std::int64_t c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

Rational FourierSpectrum::variance_exact() const {
  return Rational(1) - weight_exact(0);
}

Rational FourierSpectrum::influence_exact() const {
  __int128 sum = 0;
  for (std::uint64_t s = 0; s < size(); ++s) {
    sum += static_cast<__int128>(coeffs_[s]) * coeffs_[s] * popcount(s);
  }
  return Rational(sum, static_cast<__int128>(1) << (2 * n_));
}

Rational FourierSpectrum::coordinate_influence_exact(int coord) const {
  __int128 sum = 0;
  std::uint64_t bit = std::uint64_t(1) << coord;
  for (std::uint64_t s = 0; s < size(); ++s) {
    if (s & bit) sum += static_cast<__int128>(coeffs_[s]) * coeffs_[s];
  }
  return Rational(sum, static_cast<__int128>(1) << (2 * n_));
}

Rational FourierSpectrum::spectral_norm_exact() const {
  __int128 sum = 0;
  for (std::int64_t c : coeffs_) sum += c < 0 ? -static_cast<__int128>(c) : c;
  return Rational(sum, static_cast<__int128>(1) << n_);
}

bool FourierSpectrum::granularity_ok() const {
  int shift = n_ - degree();
  std::int64_t unit = std::int64_t(1) << shift;
  for (std::int64_t c : coeffs_) {
    if (c % unit != 0) return false;
  }
  return true;
}

FourierSpectrum wht(const BooleanFunction& f) {
  std::uint64_t size = f.table_size();
  std::vector<std::int64_t> v(size);
  for (std::uint64_t i = 0; i < size; ++i) v[i] = f.value(i);
  for (std::uint64_t len = 1; len < size; len <<= 1) {
    for (std::uint64_t i = 0; i < size; i += len << 1) {
      for (std::uint64_t j = i; j < i + len; ++j) {
        std::int64_t a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
  return FourierSpectrum(f.n(), std::move(v));
}

BooleanFunction inverse_wht(const FourierSpectrum& s) {
  std::uint64_t size = s.size();
  std::vector<std::int64_t> v = s.coeffs();
  for (std::uint64_t len = 1; len < size; len <<= 1) {
    for (std::uint64_t i = 0; i < size; i += len << 1) {
      for (std::uint64_t j = i; j < i + len; ++j) {
        std::int64_t a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
  // Butterfly output is 2^n * f(x).
  std::int64_t scale = std::int64_t(1) << s.n();
  BooleanFunction f(s.n());
  for (std::uint64_t i = 0; i < size; ++i) {
    if (v[i] != scale && v[i] != -scale) {
      throw NotBooleanValued("reconstructed value not in {-1,+1} at index " +
                             std::to_string(i));
    }
    f.set_value(i, v[i] > 0 ? +1 : -1);
  }
  return f;
}

double shannon_entropy(const FourierSpectrum& s) {
  // H = 2n - (2/4^n) sum c^2 log2|c|, all terms with c != 0.
  double acc = 0;
  for (std::int64_t c : s.coeffs()) {
    if (c == 0) continue;
    double cd = static_cast<double>(c < 0 ? -c : c);
    acc += cd * cd * std::log2(cd);
  }
  return 2.0 * s.n() - 2.0 * std::ldexp(acc, -2 * s.n());
}

double min_entropy(const FourierSpectrum& s) {
  std::int64_t m = s.max_abs_coeff();
  return 2.0 * s.n() - 2.0 * std::log2(static_cast<double>(m));
}

double renyi_entropy(const FourierSpectrum& s, double alpha) {
  if (alpha < 0) throw BadParams("Renyi order must be nonnegative");
  if (alpha == 1.0) throw BadParams("order 1 is the Shannon entropy");
  if (std::isinf(alpha)) return min_entropy(s);
  if (alpha == 0.0) return std::log2(static_cast<double>(s.support_size()));
  double acc = 0;
  for (std::int64_t c : s.coeffs()) {
    if (c == 0) continue;
    double p = std::ldexp(static_cast<double>(c) * static_cast<double>(c), -2 * s.n());
    acc += std::pow(p, alpha);
  }
  return std::log2(acc) / (1.0 - alpha);
}

MeasureProfile measures(const FourierSpectrum& s) {
  MeasureProfile m;
  m.shannon_entropy = shannon_entropy(s);
  m.min_entropy = min_entropy(s);
  for (double alpha : kDefaultRenyiOrders) {
    m.renyi[alpha] = renyi_entropy(s, alpha);
  }
  m.total_influence = s.influence_exact().to_double();
  m.per_coordinate_influence.resize(s.n());
  for (int i = 0; i < s.n(); ++i) {
    m.per_coordinate_influence[i] = s.coordinate_influence_exact(i).to_double();
  }
  m.variance = s.variance_exact().to_double();
  m.degree = s.degree();
  m.max_coeff_abs = std::ldexp(static_cast<double>(s.max_abs_coeff()), -s.n());
  m.spectral_norm = s.spectral_norm_exact().to_double();
  return m;
}

KklReport kkl_ratio(const BooleanFunction& f) {
  if (f.is_constant()) throw ConstantFunction("kkl_ratio needs a non-constant function");
  FourierSpectrum s = wht(f);
  Rational max_inf(0);
  for (int i = 0; i < f.n(); ++i) {
    max_inf = std::max(max_inf, s.coordinate_influence_exact(i));
  }
  KklReport r;
  r.max_coordinate_influence = max_inf.to_double();
  if (max_inf >= Rational(1)) {
    r.sentinel = true;
    r.log_term = 0;
    r.ratio = std::numeric_limits<double>::infinity();
    return r;
  }
  double var = s.variance_exact().to_double();
  r.log_term = var * std::log2(1.0 / max_inf.to_double());
  r.ratio = s.influence_exact().to_double() / r.log_term;
  return r;
}

}  // namespace fet
