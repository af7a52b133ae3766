#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fet/common.hpp"

namespace fet {

// Partial assignment tau : [n] -> {-1, 1, *}; generates the subcube of points
// agreeing with tau on its fixed coordinates.
struct PartialAssignment {
  int n = 0;
  std::uint64_t fixed_mask = 0;   // coordinates with tau != *
  std::uint64_t value_bits = 0;   // bit j set <-> tau(j) = -1; subset of fixed_mask

  PartialAssignment() = default;
  PartialAssignment(int n_, std::uint64_t fixed, std::uint64_t values)
      : n(n_), fixed_mask(fixed), value_bits(values & fixed) {
    if (n < 1 || n > caps::kMaxVars) throw BadParams("partial assignment size out of range");
    if (fixed >= (std::uint64_t(1) << n)) throw BadParams("fixed mask out of range");
  }

  int codim() const { return popcount(fixed_mask); }

  bool contains(std::uint64_t point) const {
    return (point & fixed_mask) == value_bits;
  }

  std::uint64_t num_points() const { return std::uint64_t(1) << (n - codim()); }

  // All points of the subcube, ascending.
  std::vector<std::uint64_t> points() const;

  std::string to_string() const;  // e.g. "x1=-1 x3=+1"

  friend bool operator==(const PartialAssignment& a, const PartialAssignment& b) {
    return a.n == b.n && a.fixed_mask == b.fixed_mask && a.value_bits == b.value_bits;
  }
};

}  // namespace fet
