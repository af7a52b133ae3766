#include "fet/partitions.hpp"

#include <algorithm>
#include <unordered_map>

#include "fet/spectrum.hpp"

namespace fet {

namespace {

void check_partition_cap(int n) {
  if (n > caps::kPartitionCheckMaxVars) {
    throw SizeLimit("partition verification capped at n <= " +
                    std::to_string(caps::kPartitionCheckMaxVars));
  }
}

template <typename Partition>
Rational verify_partition_impl(const BooleanFunction& f, const Partition& part) {
  check_partition_cap(part.n);
  if (part.n != f.n()) throw BadParams("function and partition sizes differ");
  if (part.cells.size() != part.cell_values.size()) {
    throw BadParams("cell/value count mismatch");
  }
  if (part.cells.empty()) throw NotAPartition("no cells");

  // Exact measure: sum over cells of 2^-codim must be 1.
  Rational measure(0);
  Rational auc(0);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    int codim = part.cells[i].codim();
    measure += Rational::dyadic(1, codim);
    auc += Rational::dyadic(codim, codim);
  }
  if (measure != Rational(1)) {
    throw NotAPartition("cell measures sum to " + measure.to_string());
  }
  // Point-by-point: every input covered exactly once, and monochromatic.
  std::vector<std::uint32_t> cover(f.table_size(), 0);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    for (std::uint64_t p : part.cells[i].points()) {
      if (cover[p]++) {
        throw NotAPartition("input " + std::to_string(p) + " covered twice");
      }
      if (f.value(p) != part.cell_values[i]) {
        throw NotMonochromatic("cell " + std::to_string(i) +
                               " is not monochromatic at input " + std::to_string(p));
      }
    }
  }
  // Measure 1 plus no double cover implies full coverage, but check anyway.
  for (std::uint64_t x = 0; x < f.table_size(); ++x) {
    if (!cover[x]) throw NotAPartition("input " + std::to_string(x) + " uncovered");
  }
  return auc;
}

}  // namespace

int SubcubePartition::max_codim() const {
  int m = 0;
  for (const auto& c : cells) m = std::max(m, c.codim());
  return m;
}

int AffinePartition::max_codim() const {
  int m = 0;
  for (const auto& c : cells) m = std::max(m, c.codim());
  return m;
}

Rational verify_partition(const BooleanFunction& f, const SubcubePartition& part) {
  return verify_partition_impl(f, part);
}

Rational verify_partition(const BooleanFunction& f, const AffinePartition& part) {
  return verify_partition_impl(f, part);
}

namespace {

// State for the exact search: regions are bitmasks over the <= 16 inputs.
struct AucSearch {
  int n;
  std::uint32_t ones;             // TRUE points of f
  std::uint32_t full;
  // cube_points[fixed][assign packed]: point set of the subcube; built lazily
  // per (fixed, base point).
  std::unordered_map<std::uint64_t, std::pair<std::int32_t, std::uint64_t>> memo;
  // memo: region -> (cost, chosen (fixed<<32 | base)) where cost is
  // sum over cells of codim * 2^(n - codim); -1 marks in-progress.

  std::uint32_t subcube_points(std::uint32_t base, std::uint32_t fixed) const {
    std::uint32_t free_mask = ~fixed & ((1u << n) - 1);
    std::uint32_t pts = 0;
    std::uint32_t sub = 0;
    while (true) {
      pts |= 1u << ((base & fixed) | sub);
      if (sub == free_mask) break;
      sub = (sub - free_mask) & free_mask;
    }
    return pts;
  }

  bool monochromatic(std::uint32_t pts) const {
    std::uint32_t inside = pts & ones;
    return inside == 0 || inside == pts;
  }

  // Minimal total cost of partitioning `region` into monochromatic subcubes.
  std::int32_t solve(std::uint32_t region) {
    if (region == 0) return 0;
    auto it = memo.find(region);
    if (it != memo.end()) return it->second.first;
    int lowest = std::countr_zero(region);
    std::int32_t best = INT32_MAX;
    std::uint64_t best_choice = 0;
    // Branch over subcubes through the lowest uncovered point, ascending
    // fixed-mask order for a deterministic tie-break.
    for (std::uint32_t fixed = 0; fixed < (1u << n); ++fixed) {
      std::uint32_t pts = subcube_points(static_cast<std::uint32_t>(lowest), fixed);
      if ((pts & ~region) != 0) continue;  // must lie inside the region
      if (!monochromatic(pts)) continue;
      int codim = popcount(fixed);
      std::int32_t cost = codim << (n - codim);
      std::int32_t rest = solve(region & ~pts);
      if (rest != INT32_MAX && cost + rest < best) {
        best = cost + rest;
        best_choice = (std::uint64_t(fixed) << 32) | std::uint64_t(lowest);
      }
    }
    memo[region] = {best, best_choice};
    return best;
  }

  void extract(std::uint32_t region, SubcubePartition& out, const BooleanFunction& f) {
    while (region != 0) {
      auto [cost, choice] = memo.at(region);
      std::uint32_t fixed = static_cast<std::uint32_t>(choice >> 32);
      std::uint32_t base = static_cast<std::uint32_t>(choice & 0xffffffffu);
      out.cells.emplace_back(n, fixed, base & fixed);
      out.cell_values.push_back(f.value(base));
      region &= ~subcube_points(base, fixed);
    }
  }
};

}  // namespace

ExactAucResult min_auc_exact(const BooleanFunction& f) {
  if (f.n() > caps::kExactAucMaxVars) {
    throw SizeLimit("exact aUC search capped at n <= " +
                    std::to_string(caps::kExactAucMaxVars));
  }
  AucSearch search;
  search.n = f.n();
  search.full = static_cast<std::uint32_t>((std::uint64_t(1) << f.table_size()) - 1);
  search.ones = 0;
  for (std::uint64_t x = 0; x < f.table_size(); ++x) {
    if (f.bit(x)) search.ones |= 1u << x;
  }
  std::int32_t cost = search.solve(search.full);
  if (cost == INT32_MAX) throw InternalError("aUC search found no partition");
  ExactAucResult result;
  result.auc = Rational::dyadic(cost, f.n());
  result.partition.n = f.n();
  search.extract(search.full, result.partition, f);
  verify_partition(f, result.partition);
  return result;
}

namespace {

void check_heuristic_cap(int n) {
  if (n > caps::kPartitionCheckMaxVars) {
    throw SizeLimit("heuristic partitions capped at n <= " +
                    std::to_string(caps::kPartitionCheckMaxVars));
  }
}

bool all_same_value(const BooleanFunction& f, const std::vector<std::uint64_t>& pts) {
  int v = f.value(pts[0]);
  for (std::uint64_t p : pts) {
    if (f.value(p) != v) return false;
  }
  return true;
}

void split_subcube(const BooleanFunction& f, const PartialAssignment& region,
                   const std::vector<std::uint64_t>& pts, SubcubePartition& out) {
  if (all_same_value(f, pts)) {
    out.cells.push_back(region);
    out.cell_values.push_back(f.value(pts[0]));
    return;
  }
  // Greedy: fixing which free coordinate makes the most mass monochromatic?
  int best_coord = -1;
  std::uint64_t best_score = 0;
  for (int j = 0; j < region.n; ++j) {
    if (region.fixed_mask >> j & 1) continue;
    std::uint64_t bit = std::uint64_t(1) << j;
    int first_pos = 2, first_neg = 2;
    bool mono_pos = true, mono_neg = true;
    for (std::uint64_t p : pts) {
      int v = f.value(p);
      if (p & bit) {
        if (first_neg == 2) first_neg = v;
        mono_neg &= (v == first_neg);
      } else {
        if (first_pos == 2) first_pos = v;
        mono_pos &= (v == first_pos);
      }
    }
    std::uint64_t half = pts.size() / 2;
    std::uint64_t score = (mono_pos ? half : 0) + (mono_neg ? half : 0);
    if (best_coord == -1 || score > best_score) {
      best_coord = j;
      best_score = score;
    }
  }
  std::uint64_t bit = std::uint64_t(1) << best_coord;
  for (int side = 0; side < 2; ++side) {
    PartialAssignment sub(region.n, region.fixed_mask | bit,
                          region.value_bits | (side ? bit : 0));
    std::vector<std::uint64_t> sub_pts;
    sub_pts.reserve(pts.size() / 2);
    for (std::uint64_t p : pts) {
      if (((p & bit) != 0) == (side == 1)) sub_pts.push_back(p);
    }
    split_subcube(f, sub, sub_pts, out);
  }
}

}  // namespace

SubcubePartition heuristic_subcube_partition(const BooleanFunction& f) {
  check_heuristic_cap(f.n());
  SubcubePartition out;
  out.n = f.n();
  PartialAssignment whole(f.n(), 0, 0);
  std::vector<std::uint64_t> pts(f.table_size());
  for (std::uint64_t x = 0; x < f.table_size(); ++x) pts[x] = x;
  split_subcube(f, whole, pts, out);
  verify_partition(f, out);
  return out;
}

namespace {

void split_affine(const BooleanFunction& f, const AffineConstraintSystem& region,
                  const std::vector<std::uint64_t>& pts, AffinePartition& out) {
  if (all_same_value(f, pts)) {
    out.cells.push_back(region);
    out.cell_values.push_back(f.value(pts[0]));
    return;
  }
  // Greedy over all parities not determined on the region; lowest mask wins ties.
  std::uint64_t best_mask = 0;
  std::uint64_t best_score = 0;
  bool have = false;
  for (std::uint64_t mask = 1; mask < f.table_size(); ++mask) {
    if (region.determined_sign(mask) != 0) continue;
    int first_pos = 2, first_neg = 2;
    bool mono_pos = true, mono_neg = true;
    for (std::uint64_t p : pts) {
      int v = f.value(p);
      if (parity_bit(p, mask)) {
        if (first_neg == 2) first_neg = v;
        mono_neg &= (v == first_neg);
      } else {
        if (first_pos == 2) first_pos = v;
        mono_pos &= (v == first_pos);
      }
    }
    std::uint64_t half = pts.size() / 2;
    std::uint64_t score = (mono_pos ? half : 0) + (mono_neg ? half : 0);
    if (!have || score > best_score) {
      have = true;
      best_mask = mask;
      best_score = score;
    }
  }
  if (!have) throw InternalError("mixed affine region with no free parity");
  for (int sign = +1; sign >= -1; sign -= 2) {
    AffineConstraintSystem sub = region;
    sub.add_constraint(best_mask, sign);
    std::vector<std::uint64_t> sub_pts;
    sub_pts.reserve(pts.size() / 2);
    int want = sign == -1 ? 1 : 0;
    for (std::uint64_t p : pts) {
      if (parity_bit(p, best_mask) == want) sub_pts.push_back(p);
    }
    split_affine(f, sub, sub_pts, out);
  }
}

}  // namespace

AffinePartition heuristic_affine_partition(const BooleanFunction& f) {
  check_heuristic_cap(f.n());
  AffinePartition out;
  out.n = f.n();
  AffineConstraintSystem whole(f.n());
  std::vector<std::uint64_t> pts(f.table_size());
  for (std::uint64_t x = 0; x < f.table_size(); ++x) pts[x] = x;
  split_affine(f, whole, pts, out);
  verify_partition(f, out);
  return out;
}

namespace {

template <typename Partition>
EntropyVsAucReport entropy_vs_auc_impl(const BooleanFunction& f, const Partition& part) {
  EntropyVsAucReport r;
  r.auc = verify_partition(f, part);
  r.entropy = shannon_entropy(wht(f));
  r.holds = r.entropy <= 2.0 * r.auc.to_double() + 1e-9;
  return r;
}

}  // namespace

EntropyVsAucReport verify_entropy_vs_auc(const BooleanFunction& f,
                                         const SubcubePartition& part) {
  return entropy_vs_auc_impl(f, part);
}

EntropyVsAucReport verify_entropy_vs_auc(const BooleanFunction& f,
                                         const AffinePartition& part) {
  return entropy_vs_auc_impl(f, part);
}

}  // namespace fet
