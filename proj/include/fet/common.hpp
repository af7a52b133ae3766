#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

// Build-time caps. Everything above a cap is rejected with SizeLimit rather
// than silently degrading.
namespace fet::caps {
inline constexpr int kMaxVars = 24;             // full table + spectrum in memory
inline constexpr int kParityCertMaxVars = 8;    // affine-subspace enumeration
inline constexpr int kExactAucMaxVars = 4;      // region-memoized partition search
inline constexpr int kLpMaxVars = 10;           // dense LP constraint matrix
inline constexpr int kMansourMaxVars = 16;      // full WHT of the dropped-term DNF
inline constexpr int kPartitionCheckMaxVars = 16;
inline constexpr int kTypicalClaimsMaxVars = 12;   // M*n for the finite-M claims
inline constexpr int kReconstructMaxVars = 16;     // total variables of a form
inline constexpr std::uint64_t kBhExactBudget = 1ull << 20;
}  // namespace fet::caps

namespace fet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input larger than a documented cap.
struct SizeLimit : Error {
  using Error::Error;
};

// Malformed parameters (bad constructor args, inconsistent systems, ...).
struct BadParams : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

struct DuplicateLiteral : Error {
  using Error::Error;
};

struct NotBooleanValued : Error {
  using Error::Error;
};

struct NotAPartition : Error {
  using Error::Error;
};

struct NotMonochromatic : Error {
  using Error::Error;
};

struct ConstantFunction : Error {
  using Error::Error;
};

struct Infeasible : Error {
  using Error::Error;
};

struct NotFlat : Error {
  using Error::Error;
};

struct NotOneEighthApprox : Error {
  using Error::Error;
};

// A proved statement came out false, or internal bookkeeping broke.
struct InternalError : Error {
  using Error::Error;
};

inline int popcount(std::uint64_t x) { return std::popcount(x); }

// Parity of <x, s> over F2, i.e. the sign bit of chi_s at input index x.
inline int parity_bit(std::uint64_t x, std::uint64_t s) {
  return popcount(x & s) & 1;
}

}  // namespace fet
