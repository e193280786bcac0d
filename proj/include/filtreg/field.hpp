#pragma once

#include <cstdint>

namespace filtreg {

using Coeff = std::uint32_t;

/// Arithmetic in Z/p for a prime p < 2^31. Elements are kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff from_int(std::int64_t v) const noexcept;
  /// Representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  static bool is_prime(std::uint32_t p) noexcept;

 private:
  std::uint32_t p_;
};

}  // namespace filtreg
