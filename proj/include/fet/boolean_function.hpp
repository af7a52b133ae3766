#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fet/common.hpp"

namespace fet {

// Truth table of f : {-1,1}^n -> {-1,1}, bit-packed.
//
// Conventions (used consistently across the toolkit):
//   * input index i encodes the point whose j-th coordinate is (-1)^(bit j of i),
//   * stored bit 1 <-> value -1 (TRUE), stored bit 0 <-> value +1 (FALSE),
//   * subset masks are little-endian: variable j <-> bit j.
class BooleanFunction {
 public:
  explicit BooleanFunction(int n, int fill_value = +1);

  int n() const { return n_; }
  std::uint64_t table_size() const { return std::uint64_t(1) << n_; }

  // Value in {-1,+1}.
  int value(std::uint64_t index) const {
    return bit(index) ? -1 : +1;
  }
  bool bit(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }
  void set_bit(std::uint64_t index, bool one);
  void set_value(std::uint64_t index, int value) { set_bit(index, value == -1); }

  bool is_constant() const;

  BooleanFunction negated() const;

  // Product on disjoint variables: result(x, y) = f(x) * g(y), with f's
  // variables in the low bits.
  static BooleanFunction tensor(const BooleanFunction& f, const BooleanFunction& g);

  // Standard constructions, all under the TRUE = -1 convention.
  static BooleanFunction constant(int n, int value);
  static BooleanFunction dictator(int n, int coord);     // f(x) = x_coord
  static BooleanFunction and_all(int n);                 // TRUE iff all coords TRUE
  static BooleanFunction or_all(int n);                  // TRUE iff some coord TRUE
  static BooleanFunction parity(int n, std::uint64_t mask);  // chi_mask
  static BooleanFunction majority(int n);                // odd n only
  static BooleanFunction tribes(int width, int count);   // OR of disjoint ANDs
  static BooleanFunction inner_product(int n);           // bent IP-mod-2, even n
  static BooleanFunction or_ip(int n);                   // x_1 OR IP(x_1..x_n)
  static BooleanFunction address(int addr_bits);         // n = a + 2^a

  // For n <= 6: table packed into one word, bit i = stored bit i.
  static BooleanFunction from_table_bits(int n, std::uint64_t bits);
  std::uint64_t table_bits() const;  // n <= 6 only

  static BooleanFunction random(int n, std::uint64_t seed);

  // Text format: header line "n=<k>", then either 2^k chars of {0,1}
  // (char i = stored bit i) or a hex string of the same table.
  static BooleanFunction from_text(const std::string& text);
  static BooleanFunction read_file(const std::string& path);
  std::string to_text() const;
  std::string table_hex() const;

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const BooleanFunction& f);

}  // namespace fet
