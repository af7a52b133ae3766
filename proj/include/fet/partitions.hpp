#pragma once

#include <cstdint>
#include <vector>

#include "fet/affine.hpp"
#include "fet/boolean_function.hpp"
#include "fet/rational.hpp"
#include "fet/subcube.hpp"

namespace fet {

// Unambiguous certificate: monochromatic subcubes partitioning the cube.
struct SubcubePartition {
  int n = 0;
  std::vector<PartialAssignment> cells;
  std::vector<int> cell_values;  // -1 / +1 per cell

  std::size_t size() const { return cells.size(); }
  int max_codim() const;
};

// Unambiguous parity certificate: monochromatic affine subspaces.
struct AffinePartition {
  int n = 0;
  std::vector<AffineConstraintSystem> cells;
  std::vector<int> cell_values;

  std::size_t size() const { return cells.size(); }
  int max_codim() const;
};

// Checks disjointness + coverage (exact measure sum and point-by-point for
// n <= 16) and monochromaticity against f, then returns the exact average
// co-dimension aUC(f, part). Throws NotAPartition / NotMonochromatic.
Rational verify_partition(const BooleanFunction& f, const SubcubePartition& part);
Rational verify_partition(const BooleanFunction& f, const AffinePartition& part);

struct ExactAucResult {
  Rational auc;
  SubcubePartition partition;
};

// Exact minimum average unambiguous certificate complexity over subcube
// partitions; region-memoized branch and bound, n <= 4.
ExactAucResult min_auc_exact(const BooleanFunction& f);

// Greedy decision-tree partition: split on the coordinate whose fixing makes
// the most mass monochromatic. Always valid; singleton cells at worst. n <= 16.
SubcubePartition heuristic_subcube_partition(const BooleanFunction& f);

// Greedy parity-decision-tree partition: split on the parity (lowest mask on
// ties) whose fixing makes the most mass monochromatic. n <= 16.
AffinePartition heuristic_affine_partition(const BooleanFunction& f);

struct EntropyVsAucReport {
  double entropy = 0;
  Rational auc;
  bool holds = false;  // H(fhat^2) <= 2 aUC(f, part)
};

EntropyVsAucReport verify_entropy_vs_auc(const BooleanFunction& f,
                                         const SubcubePartition& part);
EntropyVsAucReport verify_entropy_vs_auc(const BooleanFunction& f,
                                         const AffinePartition& part);

}  // namespace fet
