#include "fet/boolean_function.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace fet {

namespace {

void check_n(int n) {
  if (n < 1 || n > caps::kMaxVars) {
    throw SizeLimit("variable count " + std::to_string(n) + " outside [1, " +
                    std::to_string(caps::kMaxVars) + "]");
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int n, int fill_value) : n_(n) {
  check_n(n);
  if (fill_value != +1 && fill_value != -1) {
    throw BadParams("fill value must be -1 or +1");
  }
  std::uint64_t words = (table_size() + 63) >> 6;
  words_.assign(words, fill_value == -1 ? ~std::uint64_t(0) : 0);
  if (fill_value == -1 && n_ < 6) {
    words_[0] = (std::uint64_t(1) << table_size()) - 1;
  }
}

void BooleanFunction::set_bit(std::uint64_t index, bool one) {
  std::uint64_t mask = std::uint64_t(1) << (index & 63);
  if (one) {
    words_[index >> 6] |= mask;
  } else {
    words_[index >> 6] &= ~mask;
  }
}

bool BooleanFunction::is_constant() const {
  int first = value(0);
  for (std::uint64_t i = 1; i < table_size(); ++i) {
    if (value(i) != first) return false;
  }
  return true;
}

BooleanFunction BooleanFunction::negated() const {
  BooleanFunction g = *this;
  for (auto& w : g.words_) w = ~w;
  if (n_ < 6) g.words_[0] &= (std::uint64_t(1) << table_size()) - 1;
  return g;
}

BooleanFunction BooleanFunction::tensor(const BooleanFunction& f,
                                        const BooleanFunction& g) {
  if (f.n_ + g.n_ > caps::kMaxVars) {
    throw SizeLimit("tensor exceeds the variable cap");
  }
  BooleanFunction h(f.n_ + g.n_);
  std::uint64_t fmask = f.table_size() - 1;
  for (std::uint64_t i = 0; i < h.table_size(); ++i) {
    int v = f.value(i & fmask) * g.value(i >> f.n_);
    h.set_value(i, v);
  }
  return h;
}

BooleanFunction BooleanFunction::constant(int n, int value) {
  if (value != -1 && value != +1) throw BadParams("constant value must be -1 or +1");
  return BooleanFunction(n, value);
}

BooleanFunction BooleanFunction::dictator(int n, int coord) {
  check_n(n);
  if (coord < 0 || coord >= n) throw BadParams("dictator coordinate out of range");
  BooleanFunction f(n);
  for (std::uint64_t i = 0; i < f.table_size(); ++i) {
    f.set_bit(i, (i >> coord) & 1);
  }
  return f;
}

BooleanFunction BooleanFunction::and_all(int n) {
  BooleanFunction f(n, +1);
  f.set_value(f.table_size() - 1, -1);
  return f;
}

BooleanFunction BooleanFunction::or_all(int n) {
  BooleanFunction f(n, -1);
  f.set_value(0, +1);
  return f;
}

BooleanFunction BooleanFunction::parity(int n, std::uint64_t mask) {
  check_n(n);
  if (mask >= (std::uint64_t(1) << n)) throw BadParams("parity mask out of range");
  BooleanFunction f(n);
  for (std::uint64_t i = 0; i < f.table_size(); ++i) {
    f.set_bit(i, parity_bit(i, mask));
  }
  return f;
}

BooleanFunction BooleanFunction::majority(int n) {
  check_n(n);
  if (n % 2 == 0) throw BadParams("majority needs an odd variable count");
  BooleanFunction f(n);
  for (std::uint64_t i = 0; i < f.table_size(); ++i) {
    f.set_bit(i, popcount(i) > n / 2);
  }
  return f;
}

BooleanFunction BooleanFunction::tribes(int width, int count) {
  if (width < 1 || count < 1) throw BadParams("tribes needs positive width and count");
  int n = width * count;
  check_n(n);
  BooleanFunction f(n);
  std::uint64_t tribe = (std::uint64_t(1) << width) - 1;
  for (std::uint64_t i = 0; i < f.table_size(); ++i) {
    bool fired = false;
    for (int t = 0; t < count && !fired; ++t) {
      fired = ((i >> (t * width)) & tribe) == tribe;
    }
    f.set_bit(i, fired);
  }
  return f;
}

BooleanFunction BooleanFunction::inner_product(int n) {
  check_n(n);
  if (n % 2 != 0) throw BadParams("inner product needs an even variable count");
  BooleanFunction f(n);
  for (std::uint64_t i = 0; i < f.table_size(); ++i) {
    int acc = 0;
    for (int j = 0; j < n; j += 2) {
      acc ^= static_cast<int>((i >> j) & (i >> (j + 1)) & 1);
    }
    f.set_bit(i, acc);
  }
  return f;
}

BooleanFunction BooleanFunction::or_ip(int n) {
  BooleanFunction ip = inner_product(n);
  BooleanFunction f(n);
  for (std::uint64_t i = 0; i < f.table_size(); ++i) {
    f.set_bit(i, (i & 1) || ip.bit(i));
  }
  return f;
}

BooleanFunction BooleanFunction::address(int addr_bits) {
  if (addr_bits < 1) throw BadParams("address needs at least one address bit");
  int n = addr_bits + (1 << addr_bits);
  check_n(n);
  BooleanFunction f(n);
  std::uint64_t addr_mask = (std::uint64_t(1) << addr_bits) - 1;
  for (std::uint64_t i = 0; i < f.table_size(); ++i) {
    std::uint64_t slot = i & addr_mask;
    f.set_bit(i, (i >> (addr_bits + slot)) & 1);
  }
  return f;
}

BooleanFunction BooleanFunction::from_table_bits(int n, std::uint64_t bits) {
  check_n(n);
  if (n > 6) throw BadParams("from_table_bits handles n <= 6 only");
  BooleanFunction f(n);
  if (n < 6) bits &= (std::uint64_t(1) << f.table_size()) - 1;
  f.words_[0] = bits;
  return f;
}

std::uint64_t BooleanFunction::table_bits() const {
  if (n_ > 6) throw BadParams("table_bits handles n <= 6 only");
  return words_[0];
}

BooleanFunction BooleanFunction::random(int n, std::uint64_t seed) {
  check_n(n);
  BooleanFunction f(n);
  std::mt19937_64 rng(seed);
  for (auto& w : f.words_) w = rng();
  if (n < 6) f.words_[0] &= (std::uint64_t(1) << f.table_size()) - 1;
  return f;
}

BooleanFunction BooleanFunction::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!(in >> header) || header.rfind("n=", 0) != 0) {
    throw ParseError("expected header n=<k>", 0);
  }
  int n = 0;
  try {
    n = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw ParseError("bad variable count in header", 2);
  }
  check_n(n);
  std::string body, chunk;
  while (in >> chunk) body += chunk;
  std::uint64_t points = std::uint64_t(1) << n;
  std::uint64_t hex_len = (points + 3) / 4;
  BooleanFunction f(n);
  if (body.size() == points) {
    for (std::uint64_t i = 0; i < points; ++i) {
      if (body[i] != '0' && body[i] != '1') {
        throw ParseError("table characters must be 0 or 1", i);
      }
      f.set_bit(i, body[i] == '1');
    }
  } else if (body.size() == hex_len) {
    for (std::uint64_t i = 0; i < points; ++i) {
      char c = body[hex_len - 1 - i / 4];
      int digit;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        digit = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        digit = c - 'A' + 10;
      } else {
        throw ParseError("bad hex digit in table", hex_len - 1 - i / 4);
      }
      f.set_bit(i, (digit >> (i % 4)) & 1);
    }
  } else {
    throw ParseError("table length matches neither binary nor hex form", 0);
  }
  return f;
}

BooleanFunction BooleanFunction::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

std::string BooleanFunction::to_text() const {
  std::string out = "n=" + std::to_string(n_) + "\n";
  if (table_size() <= 64) {
    for (std::uint64_t i = 0; i < table_size(); ++i) {
      out.push_back(bit(i) ? '1' : '0');
    }
  } else {
    out += table_hex();
  }
  out.push_back('\n');
  return out;
}

std::string BooleanFunction::table_hex() const {
  static const char* digits = "0123456789abcdef";
  std::uint64_t hex_len = (table_size() + 3) / 4;
  std::string out(hex_len, '0');
  for (std::uint64_t i = 0; i < table_size(); ++i) {
    if (bit(i)) {
      std::uint64_t pos = hex_len - 1 - i / 4;
      int digit = out[pos] >= 'a' ? out[pos] - 'a' + 10 : out[pos] - '0';
      digit |= 1 << (i % 4);
      out[pos] = digits[digit];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BooleanFunction& f) {
  return os << f.to_text();
}

}  // namespace fet
