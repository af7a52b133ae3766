#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fet/common.hpp"
#include "fet/subcube.hpp"

namespace fet {

// One parity constraint: prod_{i in supp(mask)} x_i = sign.
struct ParityConstraint {
  std::uint64_t mask = 0;  // nonzero support over the variables
  int sign = +1;           // -1 or +1

  friend bool operator==(const ParityConstraint& a, const ParityConstraint& b) {
    return a.mask == b.mask && a.sign == b.sign;
  }
};

// Affine subspace of {-1,1}^n cut out by independent parity constraints,
// kept in reduced row echelon form over F2 (pivots ascending, each pivot
// eliminated from the other rows). Co-dimension = number of rows; zero rows
// means the whole cube.
class AffineConstraintSystem {
 public:
  explicit AffineConstraintSystem(int n) : n_(n) {
    if (n < 1 || n > caps::kMaxVars) throw BadParams("affine system size out of range");
  }
  // Canonicalizes; drops dependent-but-consistent rows, throws BadParams on an
  // inconsistent system (empty set).
  AffineConstraintSystem(int n, const std::vector<ParityConstraint>& rows);

  int n() const { return n_; }
  int codim() const { return static_cast<int>(rows_.size()); }
  const std::vector<ParityConstraint>& rows() const { return rows_; }

  // Adds one constraint; returns false (and leaves the system unchanged) if
  // the parity is already determined by the current rows.
  bool add_constraint(std::uint64_t mask, int sign);

  // The sign chi_mask takes on the subspace, or 0 if not determined.
  int determined_sign(std::uint64_t mask) const;

  bool contains(std::uint64_t point) const;

  std::uint64_t num_points() const { return std::uint64_t(1) << (n_ - codim()); }

  // All points, ascending order of the free-coordinate enumeration.
  std::vector<std::uint64_t> points() const;

  // The subcube x_j = v as an affine system.
  static AffineConstraintSystem from_subcube(const PartialAssignment& cell);

  std::string to_string() const;

  friend bool operator==(const AffineConstraintSystem& a, const AffineConstraintSystem& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_;
  std::vector<ParityConstraint> rows_;  // RREF, pivots ascending
};

// Enumerates the RREF bases of all k-dimensional row spaces of F2^n, in a
// fixed deterministic order (pivot sets ascending, then free entries in
// binary counting order). Visits each row space exactly once; the count is
// the Gaussian binomial [n choose k]_2.
void enumerate_rref_rowspaces(int n, int k,
                              const std::function<void(const std::vector<std::uint64_t>&)>& visit);

std::uint64_t gaussian_binomial(int n, int k);

}  // namespace fet
