#include "filtreg/bounds.hpp"

#include "filtreg/errors.hpp"

namespace filtreg {

namespace {

constexpr std::uint64_t kMaxBits = std::uint64_t{1} << 26;

void require_dim(int d) {
  if (d < 1) throw InvalidDimension(d);
}

void require_nonnegative(const BigInt& v, const char* name) {
  if (v < 0) throw IndexOutOfRange(std::string(name) + " must be nonnegative");
}

std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int j = 2; j <= k; ++j) {
    if (out > (std::uint64_t{1} << 58) / static_cast<std::uint64_t>(j))
      throw BoundTooLarge("factorial exponent overflow");
    out *= static_cast<std::uint64_t>(j);
  }
  return out;
}

}  // namespace

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  if (exp == 0) return 1;
  if (base == 0 || base == 1) return base;
  const BigInt mag = base < 0 ? BigInt(-base) : base;
  const std::uint64_t bits = boost::multiprecision::msb(mag) + 1;
  if (bits > kMaxBits / exp) throw BoundTooLarge("power exceeds the supported size");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (std::int64_t j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

std::uint64_t main_exponent(int d) { return 3 * factorial(d - 1) - 1; }

BigInt bound_assoc_graded(int d, const BigInt& D, const BigInt& r) {
  require_dim(d);
  require_nonnegative(D, "D");
  require_nonnegative(r, "r");
  if (d == 1) return D + r - 1;
  return big_pow(D + r + 1, main_exponent(d)) - d;
}

BigInt bound_hilbert_coeff(int i, int d, const BigInt& D, const BigInt& r) {
  require_dim(d);
  if (i < 0 || i > d) throw IndexOutOfRange("Hilbert coefficient index " + std::to_string(i));
  require_nonnegative(D, "D");
  require_nonnegative(r, "r");
  if (i == 0) return D;
  if (i == 1) return (D + r - 1) * D;
  return big_pow(D + r + 1, 3 * factorial(i) - static_cast<std::uint64_t>(i) + 1);
}

BigInt bound_graded_hdeg(int d, const BigInt& l_ai, const BigInt& hdeg_m, const BigInt& r) {
  require_dim(d);
  require_nonnegative(l_ai, "l(A/I)");
  require_nonnegative(hdeg_m, "hdeg");
  return bound_assoc_graded(d, big_pow(l_ai, static_cast<std::uint64_t>(d)) * hdeg_m, r);
}

BigInt bound_corollary(int d, const BigInt& l_ai) {
  require_dim(d);
  require_nonnegative(l_ai, "l(A/I)");
  if (d == 1) return l_ai - 1;
  return big_pow(l_ai + 1, main_exponent(d)) - d;
}

BigInt bound_graded_regM(int d, const BigInt& l_ai, const BigInt& mu_m, const BigInt& reg_m, const BigInt& i_m,
                         int n, const BigInt& r) {
  require_dim(d);
  require_nonnegative(l_ai, "l(A/I)");
  require_nonnegative(mu_m, "mu(M)");
  require_nonnegative(r, "r");
  if (n < 1) throw IndexOutOfRange("number of variables must be positive");
  if (reg_m < i_m) throw IndexOutOfRange("reg(M) must be at least i(M)");
  const BigInt inner = mu_m * big_pow(reg_m - i_m + 1, static_cast<std::uint64_t>(n));
  if (d == 1) return l_ai * inner + r - 1;
  const int sq = (d - 1) * (d - 1);
  if (sq >= 58) throw BoundTooLarge("exponent 2^((d-1)^2) too large");
  const BigInt base = big_pow(l_ai, static_cast<std::uint64_t>(d)) * big_pow(inner, std::uint64_t{1} << sq) + r + 1;
  return big_pow(base, main_exponent(d)) - d;
}

BigInt bound_equigenerated(int d, const BigInt& l_mqm, const BigInt& r, const BigInt& reg_m, const BigInt& i_m,
                           const BigInt& delta) {
  require_dim(d);
  require_nonnegative(l_mqm, "l(M/QM)");
  require_nonnegative(r, "r");
  if (d == 1) return l_mqm + r + reg_m - i_m - 1;
  if (delta < 1) throw IndexOutOfRange("generator degree must be positive");
  return big_pow(l_mqm + r + reg_m - i_m + (d - 1) * delta, main_exponent(d)) - d;
}

BigInt bound_fiber(int d, const BigInt& D, const BigInt& r, FiberMode mode, int i) {
  require_dim(d);
  require_nonnegative(D, "D");
  require_nonnegative(r, "r");
  switch (mode) {
    case FiberMode::A0:
      if (d == 1) return D + r;
      return big_pow(D + r + 2, main_exponent(d)) - d;
    case FiberMode::E0:
      return 2 * D * (D + r);
    case FiberMode::Ei:
      if (i < 1 || i > d - 1) throw IndexOutOfRange("fiber coefficient index " + std::to_string(i));
      return 2 * big_pow(D + r + 2, 3 * factorial(i + 1) - static_cast<std::uint64_t>(i));
    case FiberMode::Reg:
      if (d == 1) return 2 * D * (D + r) + r - 1;
      if (d == 2) return (D + r + 2) * (D + r + 2) + D * D - 3;
      return big_pow(D + r + 2, main_exponent(d)) - d;
  }
  return 0;
}

BigInt bound_fiber_classical(int d, const BigInt& D) {
  require_dim(d);
  require_nonnegative(D, "D");
  if (d == 1) return 2 * D * D - 1;
  if (d == 2) return 2 * D * D + 4 * D + 1;
  return big_pow(D + 2, main_exponent(d)) - d;
}

BigInt bound_fiber_graded(int d, const BigInt& l_ai, const BigInt& hdeg_im, const BigInt& r) {
  require_dim(d);
  require_nonnegative(l_ai, "l(A/I)");
  require_nonnegative(hdeg_im, "hdeg");
  return bound_fiber(d, big_pow(l_ai, static_cast<std::uint64_t>(d)) * hdeg_im, r, FiberMode::Reg);
}

BigInt bound_hs_binomial(int n, int d, const BigInt& value) {
  if (n < 0) throw IndexOutOfRange("n must be nonnegative");
  require_dim(d);
  require_nonnegative(value, "value");
  return binomial(n + d, d) * value;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace filtreg
