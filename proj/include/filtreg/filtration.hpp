#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "filtreg/ideal.hpp"

namespace filtreg {

/// Good I-filtration of M = A/J. Level k is stored as the ideal W_k = U_k + J,
/// so M_k = W_k / J. Beyond the tail index c, W_{k+1} = I W_k + J.
class GoodFiltration {
 public:
  /// Validates the chain U_0..U_c against I and J.
  static GoodFiltration validate(const Ideal& j, const Ideal& i, const std::vector<Ideal>& chain);
  /// The I-adic filtration {I^n M}.
  static GoodFiltration adic(const Ideal& j, const Ideal& i);

  const Ideal& base() const noexcept { return state_->base; }
  const Ideal& primary() const noexcept { return state_->primary; }
  const RingPtr& ring_ptr() const noexcept { return state_->base.ring_ptr(); }
  int tail_index() const noexcept { return static_cast<int>(state_->head.size()) - 1; }

  /// W_k, extended on demand.
  Ideal level(int k) const;
  /// l(M / M_{n+1}).
  std::size_t hilbert_samuel(int n) const;
  /// Least t with M_{k+1} = I M_k for all k >= t.
  int reduction_index() const;

  /// First n with W_{n+1} not inside qW_n + J, or nullopt if none.
  std::optional<int> first_not_in_scaled(const Ideal& q) const;

 private:
  struct State {
    Ideal base;
    Ideal primary;
    std::vector<Ideal> head;
    std::mutex mutex;
    std::vector<Ideal> tail;
    std::optional<int> r;
  };
  explicit GoodFiltration(std::shared_ptr<State> s) : state_(std::move(s)) {}

  std::shared_ptr<State> state_;
};

/// The chain M, qM_0, qM_1, ... ; requires I inside q inside m.
GoodFiltration scale_filtration(const GoodFiltration& f, const Ideal& q);
/// The filtration {(M_n + N)/N} of A/N; requires J inside N.
GoodFiltration quotient_filtration(const GoodFiltration& f, const Ideal& n);

/// True iff I is a proper ideal with some power of m inside it.
bool is_m_primary(const Ideal& i);
/// True iff every generator vanishes at the origin.
bool is_in_maximal(const Ideal& i);

struct ModuleSpec {
  RingPtr ring;
  Ideal base;
  int d = 0;
  bool depth_positive = true;
  Ideal saturation;           // J : m^infinity
  std::size_t h0_length = 0;  // l(H^0_m(M))
};

/// Requires J homogeneous.
ModuleSpec module_spec(const Ideal& j);

}  // namespace filtreg
