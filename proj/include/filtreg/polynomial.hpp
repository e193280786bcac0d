#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "filtreg/field.hpp"
#include "filtreg/monomial.hpp"

namespace filtreg {

/// A coefficient times a monomial placed in a component of a free module.
/// Ring elements use component 0 throughout.
struct Term {
  Monomial m;
  std::uint32_t comp = 0;
  Coeff c = 0;
};

/// Position-over-term refinement of grevlex: a smaller component index ranks
/// higher, ties broken by grevlex on the monomial.
inline int term_cmp(const Term& a, const Term& b) noexcept {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return grevlex_cmp(a.m, b.m);
}

namespace detail {
// Terms are kept sorted strictly descending under term_cmp with nonzero coefficients.
void normalize(std::vector<Term>& terms, const PrimeField& f);
std::vector<Term> add(std::span<const Term> a, std::span<const Term> b, const PrimeField& f);
/// a - c * mono * b
std::vector<Term> sub_mul(std::span<const Term> a, Coeff c, const Monomial& mono,
                          std::span<const Term> b, const PrimeField& f);
}  // namespace detail

class Polynomial;

/// Element of a free module A^rank, stored as a sorted sparse term list.
class FreeVector {
 public:
  FreeVector() : field_(2) {}
  explicit FreeVector(const PrimeField& f) : field_(f) {}
  FreeVector(const PrimeField& f, std::vector<Term> terms);

  static FreeVector from_component(const Polynomial& p, std::uint32_t comp);
  static FreeVector unit(const PrimeField& f, std::uint32_t comp);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::vector<Term>& mutable_terms() noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  /// Entry in the given component as a ring element.
  Polynomial component(std::uint32_t comp) const;
  /// Largest component index with a nonzero entry plus one.
  std::uint32_t support_rank() const noexcept;

  /// Degree w.r.t. per-component shifts (max over terms of deg + shift);
  /// INT_MIN for the zero vector.
  int degree(std::span<const int> shifts) const;
  bool is_homogeneous(std::span<const int> shifts) const;

  FreeVector scaled(Coeff c) const;
  FreeVector times(const Monomial& m, Coeff c) const;
  FreeVector times(const Polynomial& p) const;
  /// Moves every component index by `offset`.
  FreeVector shifted_components(std::int64_t offset) const;
  /// Keeps components in [from, to) and renumbers them starting at 0.
  FreeVector restrict_components(std::uint32_t from, std::uint32_t to) const;
  FreeVector monic() const;

  friend FreeVector operator+(const FreeVector& a, const FreeVector& b);
  friend FreeVector operator-(const FreeVector& a, const FreeVector& b);
  friend FreeVector operator-(const FreeVector& a);
  friend bool operator==(const FreeVector& a, const FreeVector& b) noexcept;

 private:
  PrimeField field_;
  std::vector<Term> terms_;
};

/// Element of A = K[x_1..x_n], K = Z/p. Terms use component 0.
class Polynomial {
 public:
  Polynomial() : field_(2) {}
  explicit Polynomial(const PrimeField& f) : field_(f) {}
  Polynomial(const PrimeField& f, std::vector<Term> terms);

  static Polynomial constant(const PrimeField& f, std::int64_t c);
  static Polynomial monomial(const PrimeField& f, const Monomial& m, Coeff c = 1);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Term& leading() const { return terms_.front(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Coeff constant_term() const;

  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;

  Polynomial pow(unsigned k) const;

 private:
  PrimeField field_;
  std::vector<Term> terms_;
};

}  // namespace filtreg
