#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "filtreg/groebner.hpp"
#include "filtreg/ring.hpp"

namespace filtreg {

/// Ideal of A given by generators, with a lazily computed reduced Groebner
/// basis shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  Ideal(RingPtr ring, const std::vector<std::string>& gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), std::vector<Polynomial>{}); }
  static Ideal unit(RingPtr ring);
  /// The homogeneous maximal ideal (x_1..x_n).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const PolyRing& ring() const noexcept { return *ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  const GroebnerBasis& groebner() const;
  /// Reduced GB as ring elements (monic, sorted by leading term descending).
  std::vector<Polynomial> basis() const;
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_zero() const;
  bool is_unit() const;
  bool is_homogeneous() const;
  bool is_monomial() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend Ideal operator+(const Ideal& a, const Ideal& b);
  friend Ideal operator*(const Ideal& a, const Ideal& b);

  Ideal times(const Polynomial& f) const;
  Ideal intersect(const Ideal& b) const;
  Ideal colon(const Polynomial& f) const;
  Ideal colon(const Ideal& b) const;
  Ideal saturation(const Ideal& b) const;
  /// k >= 0; I^0 = A.
  Ideal power(int k) const;

  /// Every variable has a pure power among the leading monomials.
  bool is_cofinite() const;
  /// l(A/J); throws NotCofinite.
  std::size_t colength() const;
  /// Basis of A/J, sorted by grevlex descending; throws NotCofinite.
  std::vector<Monomial> standard_monomials() const;
  /// Standard monomials of degree n (need not be cofinite).
  std::vector<Monomial> standard_monomials_of_degree(int n) const;
  std::size_t graded_dim(int n) const { return standard_monomials_of_degree(n).size(); }
  /// Krull dimension of A/J, computed from the leading-term ideal.
  int dimension() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// All monomials of total degree n in `nvars` variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int n);

}  // namespace filtreg
