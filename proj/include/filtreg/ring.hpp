#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "filtreg/polynomial.hpp"

namespace filtreg {

/// A = K[x_1..x_n] with K = Z/p and standard grading.
class PolyRing {
 public:
  PolyRing(std::uint32_t characteristic, std::vector<std::string> variables);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& variables() const noexcept { return names_; }

  Polynomial zero() const { return Polynomial(field_); }
  Polynomial one() const { return Polynomial::constant(field_, 1); }
  Polynomial var(std::size_t i) const;
  Polynomial constant(std::int64_t c) const { return Polynomial::constant(field_, c); }

  /// Accepts `+ - * ^`, parentheses, integers and declared variable names.
  /// `*` may be omitted between factors.
  Polynomial parse(std::string_view text) const;
  std::string to_string(const Polynomial& p) const;
  std::string to_string(const Monomial& m) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) noexcept {
    return a.characteristic() == b.characteristic() && a.names_ == b.names_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(p, std::move(vars));
}

}  // namespace filtreg
