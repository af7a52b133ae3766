#include "fet/affine.hpp"

#include <algorithm>
#include <sstream>

namespace fet {

std::vector<std::uint64_t> PartialAssignment::points() const {
  std::uint64_t free_mask = ~fixed_mask & ((std::uint64_t(1) << n) - 1);
  std::vector<std::uint64_t> out;
  out.reserve(num_points());
  // Iterate submasks of the free coordinates in increasing order.
  std::uint64_t sub = 0;
  while (true) {
    out.push_back(value_bits | sub);
    if (sub == free_mask) break;
    sub = (sub - free_mask) & free_mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PartialAssignment::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < n; ++j) {
    if (!(fixed_mask >> j & 1)) continue;
    if (!first) os << ' ';
    first = false;
    os << 'x' << (j + 1) << '=' << ((value_bits >> j & 1) ? "-1" : "+1");
  }
  if (first) os << "(free)";
  return os.str();
}

AffineConstraintSystem::AffineConstraintSystem(int n, const std::vector<ParityConstraint>& rows)
    : AffineConstraintSystem(n) {
  for (const auto& r : rows) {
    if (r.mask == 0 || r.mask >= (std::uint64_t(1) << n_)) {
      throw BadParams("parity mask out of range");
    }
    if (r.sign != -1 && r.sign != +1) throw BadParams("parity sign must be -1 or +1");
    if (!add_constraint(r.mask, r.sign)) {
      if (determined_sign(r.mask) != r.sign) {
        throw BadParams("inconsistent affine constraint system");
      }
      // Dependent and consistent: drop.
    }
  }
}

bool AffineConstraintSystem::add_constraint(std::uint64_t mask, int sign) {
  // Reduce against current rows (beta = 1 encodes sign -1 over F2).
  int beta = sign == -1 ? 1 : 0;
  for (const auto& row : rows_) {
    std::uint64_t pivot = row.mask & -row.mask;
    if (mask & pivot) {
      mask ^= row.mask;
      beta ^= row.sign == -1 ? 1 : 0;
    }
  }
  if (mask == 0) return false;
  ParityConstraint fresh{mask, beta ? -1 : +1};
  // Eliminate the new pivot from existing rows, insert keeping pivots ascending.
  std::uint64_t pivot = mask & -mask;
  for (auto& row : rows_) {
    if (row.mask & pivot) {
      row.mask ^= mask;
      row.sign *= fresh.sign;
    }
  }
  auto at = std::find_if(rows_.begin(), rows_.end(), [&](const ParityConstraint& r) {
    return (r.mask & -r.mask) > pivot;
  });
  rows_.insert(at, fresh);
  return true;
}

int AffineConstraintSystem::determined_sign(std::uint64_t mask) const {
  int beta = 0;
  for (const auto& row : rows_) {
    std::uint64_t pivot = row.mask & -row.mask;
    if (mask & pivot) {
      mask ^= row.mask;
      beta ^= row.sign == -1 ? 1 : 0;
    }
  }
  if (mask != 0) return 0;
  return beta ? -1 : +1;
}

bool AffineConstraintSystem::contains(std::uint64_t point) const {
  for (const auto& row : rows_) {
    int want = row.sign == -1 ? 1 : 0;
    if (parity_bit(point, row.mask) != want) return false;
  }
  return true;
}

std::vector<std::uint64_t> AffineConstraintSystem::points() const {
  // Pivot coordinate of each row is determined by the free coordinates:
  // bit(pivot_j) = beta_j XOR parity(point & (mask_j \ pivot_j)).
  std::uint64_t pivots = 0;
  for (const auto& row : rows_) pivots |= row.mask & -row.mask;
  std::uint64_t free_mask = ~pivots & ((std::uint64_t(1) << n_) - 1);
  std::vector<std::uint64_t> out;
  out.reserve(num_points());
  std::uint64_t sub = 0;
  while (true) {
    std::uint64_t point = sub;
    for (const auto& row : rows_) {
      std::uint64_t pivot = row.mask & -row.mask;
      int beta = row.sign == -1 ? 1 : 0;
      if (beta ^ parity_bit(sub, row.mask & ~pivot)) point |= pivot;
    }
    out.push_back(point);
    if (sub == free_mask) break;
    sub = (sub - free_mask) & free_mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineConstraintSystem AffineConstraintSystem::from_subcube(const PartialAssignment& cell) {
  AffineConstraintSystem sys(cell.n);
  for (int j = 0; j < cell.n; ++j) {
    if (cell.fixed_mask >> j & 1) {
      sys.add_constraint(std::uint64_t(1) << j, (cell.value_bits >> j & 1) ? -1 : +1);
    }
  }
  return sys;
}

std::string AffineConstraintSystem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& row : rows_) {
    if (!first) os << ", ";
    first = false;
    bool star = true;
    for (int j = 0; j < n_; ++j) {
      if (row.mask >> j & 1) {
        if (!star) os << '*';
        star = false;
        os << 'x' << (j + 1);
      }
    }
    os << '=' << (row.sign == -1 ? "-1" : "+1");
  }
  if (first) os << "(free)";
  return os.str();
}

namespace {

// Recursively fills the non-pivot entries of an RREF matrix with the given
// pivot columns, then reports it.
void fill_rref(int n, const std::vector<int>& pivots, std::size_t row,
               std::vector<std::uint64_t>& rows,
               const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (row == pivots.size()) {
    visit(rows);
    return;
  }
  // Free positions of this row: columns above its pivot that are not pivots.
  std::vector<int> free_cols;
  for (int c = pivots[row] + 1; c < n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
      free_cols.push_back(c);
    }
  }
  std::uint64_t combos = std::uint64_t(1) << free_cols.size();
  for (std::uint64_t pick = 0; pick < combos; ++pick) {
    std::uint64_t mask = std::uint64_t(1) << pivots[row];
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
      if (pick >> b & 1) mask |= std::uint64_t(1) << free_cols[b];
    }
    rows[row] = mask;
    fill_rref(n, pivots, row + 1, rows, visit);
  }
}

}  // namespace

void enumerate_rref_rowspaces(int n, int k,
                              const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    std::vector<std::uint64_t> empty;
    visit(empty);
    return;
  }
  // Pivot column sets in lexicographic order.
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  std::vector<std::uint64_t> rows(k);
  while (true) {
    fill_rref(n, pivots, 0, rows, visit);
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::uint64_t gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  // Product formula (2^(n-i) - 1) / (2^(k-i) - 1), exact via iterative count.
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ((static_cast<unsigned __int128>(1) << (n - i)) - 1);
    den *= ((static_cast<unsigned __int128>(1) << (k - i)) - 1);
  }
  return static_cast<std::uint64_t>(num / den);
}

}  // namespace fet
