// Exact-rational pivoting mode for regression baselines (n <= 6). Pivot
// entries are ratios of minors and can exceed 128 bits, so this one solver
// instantiation runs on boost multiprecision rationals.
#include <boost/multiprecision/cpp_int.hpp>

#include "fet/lp.hpp"
#include "fet/simplex.hpp"

namespace fet {

namespace {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigInt to_big(Rational::Int v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

Rational::Int from_big(const BigInt& v) {
  if (v > to_big((static_cast<Rational::Int>(1) << 126)) ||
      v < to_big(-(static_cast<Rational::Int>(1) << 126))) {
    throw InternalError("exact LP optimum does not fit 128 bits");
  }
  bool neg = v < 0;
  BigInt a = neg ? BigInt(-v) : v;
  std::uint64_t lo = static_cast<std::uint64_t>(a & 0xffffffffffffffffULL);
  std::uint64_t hi = static_cast<std::uint64_t>(a >> 64);
  Rational::Int out = (static_cast<Rational::Int>(hi) << 64) | static_cast<Rational::Int>(lo);
  return neg ? -out : out;
}

}  // namespace

Rational approx_spectral_norm_exact(const BooleanFunction& f, const Rational& eps, int d) {
  if (f.n() > 6) throw SizeLimit("exact LP mode is capped at n <= 6");
  if (eps.sign() < 0 || eps >= Rational(1)) throw BadParams("eps must lie in [0, 1)");
  if (d < 0 || d > f.n()) throw BadParams("degree bound out of range");

  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < f.table_size(); ++m) {
    if (popcount(m) <= d) masks.push_back(m);
  }
  std::size_t k = masks.size();
  std::uint64_t points = f.table_size();
  BigRational eps_big(to_big(eps.num()), to_big(eps.den()));
  std::vector<std::vector<BigRational>> a(2 * points, std::vector<BigRational>(2 * k, 0));
  std::vector<BigRational> b(2 * points), c(2 * k, 1);
  for (std::uint64_t x = 0; x < points; ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      int chi = parity_bit(x, masks[j]) ? -1 : 1;
      a[2 * x][j] = chi;
      a[2 * x][k + j] = -chi;
      a[2 * x + 1][j] = -chi;
      a[2 * x + 1][k + j] = chi;
    }
    b[2 * x] = BigRational(f.value(x)) + eps_big;
    b[2 * x + 1] = eps_big - BigRational(f.value(x));
  }
  DenseSimplex<BigRational> solver(std::move(a), std::move(b), std::move(c), BigRational(0));
  LpStatus status = solver.solve();
  if (status == LpStatus::Infeasible) {
    throw Infeasible("no degree-" + std::to_string(d) + " polynomial is within eps of f");
  }
  if (status != LpStatus::Optimal) throw InternalError("unbounded spectral-norm program");
  const BigRational& opt = solver.objective();
  return Rational(from_big(numerator(opt)), from_big(denominator(opt)));
}

}  // namespace fet
