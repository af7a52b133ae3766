#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fet/boolean_function.hpp"
#include "fet/rational.hpp"

namespace fet {

// Exact Fourier spectrum: coeff(S) stores the integer 2^n * fhat(S).
// Construction checks Parseval (sum of squares = 4^n).
class FourierSpectrum {
 public:
  FourierSpectrum(int n, std::vector<std::int64_t> scaled_coeffs);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t(1) << n_; }
  std::int64_t coeff(std::uint64_t mask) const { return coeffs_[mask]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  double fhat(std::uint64_t mask) const;
  Rational fhat_exact(std::uint64_t mask) const;

  int degree() const;                 // max |S| with coeff != 0; 0 for constants
  std::uint64_t support_size() const;
  std::int64_t max_abs_coeff() const;

  Rational variance_exact() const;       // 1 - fhat(0)^2
  Rational influence_exact() const;      // sum |S| fhat(S)^2
  Rational coordinate_influence_exact(int coord) const;
  Rational spectral_norm_exact() const;  // sum |fhat(S)|
  Rational weight_exact(std::uint64_t mask) const { return fhat_exact(mask) * fhat_exact(mask); }

  // Every coefficient is an integral multiple of 2^(n - deg).
  bool granularity_ok() const;

 private:
  int n_;
  std::vector<std::int64_t> coeffs_;
};

// Exact Walsh-Hadamard transform, O(n 2^n) integer butterflies.
FourierSpectrum wht(const BooleanFunction& f);

// Inverse transform; throws NotBooleanValued unless every reconstructed point
// value lies in {-1,+1}.
BooleanFunction inverse_wht(const FourierSpectrum& s);

// Shannon/min/Renyi entropies and influence data, in bits. Logs use base 2
// and 0*log(1/0) := 0.
struct MeasureProfile {
  double shannon_entropy = 0;
  double min_entropy = 0;
  std::map<double, double> renyi;  // order alpha -> H_alpha
  double total_influence = 0;
  std::vector<double> per_coordinate_influence;
  double variance = 0;
  int degree = 0;
  double max_coeff_abs = 0;
  double spectral_norm = 0;
};

inline constexpr double kDefaultRenyiOrders[] = {0.0, 0.5, 1.5, 2.0, 3.0};

MeasureProfile measures(const FourierSpectrum& s);

double shannon_entropy(const FourierSpectrum& s);
double min_entropy(const FourierSpectrum& s);
// alpha >= 0, alpha != 1 (use shannon_entropy for the limit).
double renyi_entropy(const FourierSpectrum& s, double alpha);

struct KklReport {
  double max_coordinate_influence = 0;
  double log_term = 0;   // Var(f) * log2(1 / max_i Inf_i)
  double ratio = 0;      // Inf(f) / log_term; +inf sentinel when log_term = 0
  bool sentinel = false;
};

// Ratio form of the KKL bound; throws ConstantFunction on constants.
KklReport kkl_ratio(const BooleanFunction& f);

}  // namespace fet
