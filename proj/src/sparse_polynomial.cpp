#include "fet/sparse_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace fet {

void SparsePolynomial::set_coeff(std::uint64_t mask, double value) {
  if (mask >= (std::uint64_t(1) << n_)) throw BadParams("term mask out of range");
  if (value == 0.0) {
    terms_.erase(mask);
  } else {
    terms_[mask] = value;
  }
}

int SparsePolynomial::degree() const {
  int deg = 0;
  for (const auto& [mask, c] : terms_) deg = std::max(deg, popcount(mask));
  return deg;
}

double SparsePolynomial::spectral_norm() const {
  double sum = 0;
  for (const auto& [mask, c] : terms_) sum += std::fabs(c);
  return sum;
}

double SparsePolynomial::max_abs_coeff() const {
  double best = 0;
  for (const auto& [mask, c] : terms_) best = std::max(best, std::fabs(c));
  return best;
}

double SparsePolynomial::eval(std::uint64_t point) const {
  double value = 0;
  for (const auto& [mask, c] : terms_) {
    value += parity_bit(point, mask) ? -c : c;
  }
  return value;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  if (o.n_ != n_) throw BadParams("polynomial sizes differ");
  SparsePolynomial out = *this;
  for (const auto& [mask, c] : o.terms_) out.add_coeff(mask, c);
  return out;
}

SparsePolynomial SparsePolynomial::scaled(double factor) const {
  SparsePolynomial out(n_);
  if (factor == 0.0) return out;
  for (const auto& [mask, c] : terms_) out.terms_[mask] = c * factor;
  return out;
}

SparsePolynomial SparsePolynomial::tensor(const SparsePolynomial& o) const {
  if (n_ + o.n_ > caps::kMaxVars) throw SizeLimit("tensor exceeds the variable cap");
  SparsePolynomial out(n_ + o.n_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      out.add_coeff(m1 | (m2 << n_), c1 * c2);
    }
  }
  return out;
}

void SparsePolynomial::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::fabs(it->second) <= threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

SparsePolynomial SparsePolynomial::from_spectrum(const FourierSpectrum& s) {
  SparsePolynomial p(s.n());
  for (std::uint64_t mask = 0; mask < s.size(); ++mask) {
    if (s.coeff(mask) != 0) {
      p.terms_[mask] = std::ldexp(static_cast<double>(s.coeff(mask)), -s.n());
    }
  }
  return p;
}

SparsePolynomial SparsePolynomial::interpolate(int n, const std::vector<double>& values) {
  if (values.size() != (std::uint64_t(1) << n)) throw BadParams("need 2^n values");
  // Real Walsh-Hadamard butterfly, then scale by 2^-n.
  std::vector<double> v = values;
  std::uint64_t size = v.size();
  for (std::uint64_t len = 1; len < size; len <<= 1) {
    for (std::uint64_t i = 0; i < size; i += len << 1) {
      for (std::uint64_t j = i; j < i + len; ++j) {
        double a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
  SparsePolynomial p(n);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    double c = std::ldexp(v[mask], -n);
    if (c != 0.0) p.terms_[mask] = c;
  }
  return p;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Order by degree then mask for readability.
  std::vector<std::pair<std::uint64_t, double>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = popcount(a.first), db = popcount(b.first);
    return da != db ? da < db : a.first < b.first;
  });
  for (const auto& [mask, c] : sorted) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    os << std::fabs(c);
    for (int j = 0; j < n_; ++j) {
      if (mask >> j & 1) os << "*x" << (j + 1);
    }
  }
  return os.str();
}

}  // namespace fet
