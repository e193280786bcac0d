#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace filtreg {

/// Upper bound on the number of ring variables. Exponent vectors are dense
/// fixed-width arrays; unused slots stay zero.
inline constexpr std::size_t kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  static Monomial variable(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.exp[i] = power;
    m.deg = power;
    return m;
  }

  bool is_one() const noexcept { return deg == 0; }

  bool divides(const Monomial& o) const noexcept {
    if (deg > o.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  /// o / *this; only meaningful when divides(o).
  Monomial quotient_of(const Monomial& o) const noexcept {
    Monomial q;
    for (std::size_t i = 0; i < kMaxVars; ++i) q.exp[i] = static_cast<std::uint16_t>(o.exp[i] - exp[i]);
    q.deg = o.deg - deg;
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    m.deg = a.deg + b.deg;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.deg == b.deg && a.exp == b.exp;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
    d += m.exp[i];
  }
  m.deg = d;
  return m;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = a.exp[i] < b.exp[i] ? a.exp[i] : b.exp[i];
    d += m.exp[i];
  }
  m.deg = d;
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

/// Degree reverse lexicographic comparison: >0 if a > b, <0 if a < b, 0 if equal.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) noexcept {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace filtreg
