#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fet/boolean_function.hpp"
#include "fet/rational.hpp"
#include "fet/sparse_polynomial.hpp"

namespace fet {

struct FlatPolynomialReport {
  bool is_flat = false;
  double magnitude = 0;       // common |coefficient| (0 for the zero polynomial)
  std::uint64_t sparsity = 0; // T
  int degree = 0;
  bool approximates_boolean = false;  // all |p(x)| within [1-eps, 1+eps]
  double linf_distance = 0;           // max_x |p(x) - sign(p(x))|
  std::optional<BooleanFunction> nearest;  // pointwise sign, when defined
  double entropy = 0;        // H(fhat^2) of the nearest Boolean function
  double entropy_bound = 0;  // (1 - 4 eps^2) log2(T / (4 (1+eps)^2))
  bool bound_holds = false;
};

// Flatness, the nearest Boolean function, and the entropy lower bound from
// the flat-polynomial claim. 0 <= eps < 1/2 for the bound to be meaningful;
// strict_flat throws NotFlat instead of reporting is_flat = false.
FlatPolynomialReport flat_report(const SparsePolynomial& p, double eps,
                                 bool strict_flat = false);

// Degree-d form over d equal-size blocks of variables, at most one variable
// per block in every monomial.
class BlockMultilinearForm {
 public:
  BlockMultilinearForm(std::vector<std::vector<int>> blocks, SparsePolynomial poly);

  int block_size() const { return block_size_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int total_vars() const { return poly_.n(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const SparsePolynomial& poly() const { return poly_; }

  // Block index owning a variable.
  int block_of(int var) const { return block_of_[var]; }

 private:
  int block_size_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
  SparsePolynomial poly_;
};

struct QDecomposition {
  explicit QDecomposition(int zvars) : q0(zvars) {}

  int block = 0;
  SparsePolynomial q0;
  std::vector<int> vars;                    // block variables, ascending
  std::vector<SparsePolynomial> q;          // q[i] multiplies x_{vars[i]}
  bool identity_ok = false;                 // p = q0 + sum x_i q_i spot-checked
};

// Split p against one block: p(x) = q0(z) + sum_{i in block} x_i q_i(z).
QDecomposition q_decompose(const BlockMultilinearForm& p, int block);

struct QStructureReport {
  int block = 0;
  // Per z-assignment (packed over the non-block variables): the unique index
  // with |q_j(z)| >= 7/8; -1 encodes q0.
  std::vector<int> large_index;
  bool interval_ok = false;  // every q_i(z) in [-9/8,-7/8] u [-1/8,1/8] u [7/8,9/8]
  bool unique_ok = false;    // unique j, and sum of the others <= 1/8
};

// Checks the q-structure lemma against block 0; p must 1/8-approximate a
// Boolean function pointwise (NotOneEighthApprox otherwise).
QStructureReport verify_q_structure(const BlockMultilinearForm& p);

struct ReconstructResult {
  SparsePolynomial exact;  // multilinear p~ with deg <= d, equal to f pointwise
  BooleanFunction f;
};

// Exact Boolean reconstruction from a 1/8-approximating form: round the
// q-pieces to their {-1,0,1} values and interpolate. Total variables <= 16.
ReconstructResult reconstruct_boolean(const BlockMultilinearForm& p);

struct BhReport {
  double lhs = 0;       // (sum |phat|^(2d/(d+1)))^((d+1)/(2d)) over degree-d terms
  double norm = 0;      // max |p| over the solid cube (attained at vertices)
  bool exact_norm = false;  // false when the budget forced local search
  double constant = 0;  // C_d = d^((d+1)/(2d)) 2^((d-1)/2)
  double ratio = 0;     // lhs / norm
  bool holds = false;   // ratio <= C_d (meaningful when exact_norm)
};

// Bohnenblust-Hille quantities of the degree-d part of the form. Vertex
// exhaustion while terms * 2^(nd) fits the budget, coordinate-ascent with
// seeded restarts (a lower bound on the norm) beyond it.
BhReport bh_quantities(const BlockMultilinearForm& p, std::uint64_t seed = 0);

struct LevelMassReport {
  Rational mass;        // sum over |S| = d of |fhat(S)|
  double threshold = 0; // (1/3) sqrt(binom(n, d))
  bool exceeds = false; // mass >= threshold, decided exactly via squares
};

LevelMassReport level_mass(const BooleanFunction& f, int d);

}  // namespace fet
