#include "filtreg/field.hpp"

#include "filtreg/errors.hpp"

namespace filtreg {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw ParseError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t base = a, r = 1;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(r);
}

Coeff PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

bool PrimeField::is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

}  // namespace filtreg
