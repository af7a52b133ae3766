#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fet/affine.hpp"
#include "fet/boolean_function.hpp"
#include "fet/rational.hpp"
#include "fet/spectrum.hpp"
#include "fet/subcube.hpp"

namespace fet {

struct SensitivityReport {
  int max_sensitivity = 0;
  Rational average;            // equals Inf(f) exactly
  std::vector<int> per_input;  // s_f(x)
};

SensitivityReport sensitivity(const BooleanFunction& f);

struct CertificateWitness {
  int size = 0;                  // C(f, x)
  PartialAssignment assignment;  // lexicographically smallest minimal witness
};

// Minimal monochromatic subcube through x. Search by increasing size with the
// hitting-set pruning (a witness must hit every differing point's flip set).
CertificateWitness certificate(const BooleanFunction& f, std::uint64_t x);

struct ParityCertificateWitness {
  int codim = 0;  // C_parity(f, x)
  AffineConstraintSystem system;
};

// Minimal co-dimension monochromatic affine subspace through x; enumerates
// canonical RREF row spaces by ascending co-dimension. n <= 8.
ParityCertificateWitness parity_certificate(const BooleanFunction& f, std::uint64_t x);

// Per-input parity certificate sizes for all inputs at once (n <= 8).
std::vector<int> parity_certificates_all(const BooleanFunction& f);

// Smallest C_parity(f, x) over x, with early exit (n <= 8).
int min_parity_certificate(const BooleanFunction& f);

struct ParityAggregates {
  std::vector<int> per_input;
  int c_parity = 0;      // max over x
  int c_parity_min = 0;  // min over x
};

struct CertificateReport {
  std::vector<int> per_input;  // C(f, x)
  int c = 0;                   // max over x
  int c0 = 0;                  // max over FALSE inputs (f(x) = +1)
  int c1 = 0;                  // max over TRUE inputs (f(x) = -1)
  int c_min = 0;
  Rational average;            // aC(f)
  SensitivityReport sens;
  std::optional<ParityAggregates> parity;  // present when n <= parity cap
};

CertificateReport certificate_aggregates(const BooleanFunction& f);

struct SubspaceWitnessReport {
  std::vector<std::uint64_t> support;  // set T of coefficient masks, |T| <= 2^k
  Rational max_abs_coeff;              // max_{T} |fhat(T)|, >= 2^-k
  Rational sum_abs;                    // sum over T of |fhat(T)|, >= 1
  bool negated = false;                // f was +1 on the subspace and negated
  bool linear_relation_ok = false;     // exact integer identity
  bool max_bound_ok = false;           // max >= 2^-codim
};

// The Fourier support of the subspace indicator and the witness coefficient it
// certifies; f must be constant on h.
SubspaceWitnessReport subspace_fourier_witness(const BooleanFunction& f,
                                               const AffineConstraintSystem& h);

struct FmeiBoundReport {
  double min_entropy = 0;
  int c_parity_min = 0;
  bool holds = false;  // H_inf <= 2 * C_parity_min
};

FmeiBoundReport verify_fmei_bound(const BooleanFunction& f);

}  // namespace fet
