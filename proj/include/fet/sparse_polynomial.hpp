#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fet/boolean_function.hpp"
#include "fet/spectrum.hpp"

namespace fet {

// Real multilinear polynomial as subset-mask -> coefficient pairs.
// p(x) = sum_S c_S chi_S(x).
class SparsePolynomial {
 public:
  static constexpr double kDust = 1e-12;

  explicit SparsePolynomial(int n) : n_(n) {
    if (n < 0 || n > caps::kMaxVars) throw BadParams("polynomial size out of range");
  }

  int n() const { return n_; }
  const std::map<std::uint64_t, double>& terms() const { return terms_; }

  double coeff(std::uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? 0.0 : it->second;
  }
  void set_coeff(std::uint64_t mask, double value);
  void add_coeff(std::uint64_t mask, double value) { set_coeff(mask, coeff(mask) + value); }

  int degree() const;  // 0 for the zero polynomial
  std::uint64_t sparsity() const { return terms_.size(); }
  double spectral_norm() const;
  double max_abs_coeff() const;

  // Evaluation at the cube point with index encoding bit j <-> x_j = -1.
  double eval(std::uint64_t point) const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial scaled(double factor) const;

  // Product on disjoint variables (o's variables shifted above this one's).
  SparsePolynomial tensor(const SparsePolynomial& o) const;

  // Drop coefficients at or below the dust threshold.
  void prune(double threshold = kDust);

  static SparsePolynomial from_spectrum(const FourierSpectrum& s);

  // Multilinear interpolation of values given on all 2^n points.
  static SparsePolynomial interpolate(int n, const std::vector<double>& values);

  std::string to_string() const;

 private:
  int n_;
  std::map<std::uint64_t, double> terms_;  // only nonzero entries
};

}  // namespace fet
