#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "filtreg/polynomial.hpp"

namespace filtreg {

/// Process-wide counters, read by `filtreg run --profile`.
struct GbStats {
  std::atomic<std::uint64_t> bases{0};
  std::atomic<std::uint64_t> pairs{0};
  std::atomic<std::uint64_t> reductions{0};
  std::atomic<std::uint64_t> zero_reductions{0};
};
GbStats& gb_stats();
void reset_gb_stats();

/// Reduced Groebner basis of a submodule of a graded free module under the
/// position-over-term grevlex order. Rank one covers ideals.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  /// `shifts` gives component degrees for sugar; empty means all zero.
  GroebnerBasis(const PrimeField& f, std::vector<FreeVector> gens, std::vector<int> shifts = {});

  /// Monic, interreduced, sorted by leading term descending.
  const std::vector<FreeVector>& elements() const noexcept { return elems_; }
  bool empty() const noexcept { return elems_.empty(); }

  FreeVector normal_form(const FreeVector& v) const;
  bool reduces_to_zero(const FreeVector& v) const { return normal_form(v).is_zero(); }
  /// True if some element has a leading term dividing the term m e_comp.
  bool lead_divides(const Monomial& m, std::uint32_t comp) const noexcept;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) noexcept {
    return a.elems_ == b.elems_;
  }

 private:
  std::vector<FreeVector> elems_;
};

/// Full reduction of `v` by `reducers` (whose leading terms need not be
/// interreduced). Shared by the engine and by one-off reductions.
FreeVector reduce_full(const FreeVector& v, const std::vector<FreeVector>& reducers);

}  // namespace filtreg
