#pragma once

#include <vector>

#include "filtreg/groebner.hpp"
#include "filtreg/hilbert_series.hpp"
#include "filtreg/ideal.hpp"

namespace filtreg {

/// Hilbert series numerator shifted so that index 0 stands for degree `low`.
struct ShiftedSeries {
  SeriesPoly numerator;
  int low = 0;
};

/// Cokernel of a map of graded free modules: A^rank (generator e_c in degree
/// shifts[c]) modulo the submodule spanned by `relations`.
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(RingPtr ring, std::vector<int> shifts, std::vector<FreeVector> relations);

  /// M = A/J.
  static PresentedModule cyclic(const Ideal& j);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const PolyRing& ring() const noexcept { return *ring_; }
  std::size_t rank() const noexcept { return shifts_.size(); }
  const std::vector<int>& shifts() const noexcept { return shifts_; }
  const std::vector<FreeVector>& relations() const noexcept { return relations_; }

  const GroebnerBasis& groebner() const;
  bool is_graded() const;
  bool is_zero() const;

  std::size_t graded_dim(int n) const;
  ShiftedSeries hilbert_series() const;
  /// Krull dimension (-1 for the zero module).
  int dimension() const;
  /// e(m, M); 0 for the zero module.
  std::int64_t degree() const;
  /// l(M); throws NotCofinite if infinite.
  std::size_t length() const;
  /// l(M / K M) for an m-primary ideal K.
  std::size_t length_mod(const Ideal& k) const;
  /// min{p | M_p != 0}; throws for the zero module.
  int initial_degree() const;

 private:
  std::vector<Monomial> leads_in(std::uint32_t comp) const;

  RingPtr ring_;
  std::vector<int> shifts_;
  std::vector<FreeVector> relations_;
  std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
  std::shared_ptr<std::optional<GroebnerBasis>> gb_ = std::make_shared<std::optional<GroebnerBasis>>();
};

/// Number of standard monomials of a module GB, summed over components.
/// Throws NotCofinite if some component has infinitely many.
std::size_t standard_monomial_count(const GroebnerBasis& gb, std::size_t rank, std::size_t nvars);

}  // namespace filtreg
