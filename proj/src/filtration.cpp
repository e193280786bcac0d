#include "filtreg/filtration.hpp"

#include "filtreg/errors.hpp"
#include "filtreg/hilbert_series.hpp"

namespace filtreg {

bool is_m_primary(const Ideal& i) {
  if (i.is_unit() || !i.is_cofinite() || !is_in_maximal(i)) return false;
  const auto len = i.colength();
  const auto& r = i.ring();
  for (std::size_t v = 0; v < r.nvars(); ++v)
    if (!i.contains(r.var(v).pow(static_cast<unsigned>(len)))) return false;
  return true;
}

bool is_in_maximal(const Ideal& i) {
  for (const auto& g : i.basis())
    if (g.constant_term() != 0) return false;
  return true;
}

GoodFiltration GoodFiltration::validate(const Ideal& j, const Ideal& i, const std::vector<Ideal>& chain) {
  if (chain.empty()) throw NotGoodFiltration(0, "empty chain");
  if (!is_m_primary(i)) throw NotMPrimary();
  auto s = std::make_shared<State>();
  s->base = j;
  s->primary = i;
  for (const auto& u : chain) s->head.push_back(u + j);
  if (!s->head.front().is_unit()) throw NotGoodFiltration(0, "M_0 is not M");
  for (std::size_t k = 0; k + 1 < s->head.size(); ++k) {
    const int idx = static_cast<int>(k);
    if (!s->head[k].contains(s->head[k + 1])) throw NotGoodFiltration(idx, "chain is not descending");
    if (!s->head[k + 1].contains(i * s->head[k]))
      throw NotGoodFiltration(idx, "I M_k is not inside M_{k+1}");
  }
  return GoodFiltration(std::move(s));
}

GoodFiltration GoodFiltration::adic(const Ideal& j, const Ideal& i) {
  return validate(j, i, {Ideal::unit(j.ring_ptr())});
}

Ideal GoodFiltration::level(int k) const {
  if (k < 0) throw std::invalid_argument("negative filtration index");
  const auto c = static_cast<std::size_t>(tail_index());
  const auto uk = static_cast<std::size_t>(k);
  if (uk <= c) return state_->head[uk];
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto& tail = state_->tail;
  while (tail.size() < uk - c) {
    const Ideal& prev = tail.empty() ? state_->head.back() : tail.back();
    tail.push_back(state_->primary * prev + state_->base);
  }
  return tail[uk - c - 1];
}

std::size_t GoodFiltration::hilbert_samuel(int n) const { return level(n + 1).colength(); }

int GoodFiltration::reduction_index() const {
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    if (state_->r) return *state_->r;
  }
  int t = tail_index();
  while (t > 0) {
    const int k = t - 1;
    if (level(k + 1) == primary() * level(k) + base())
      t = k;
    else
      break;
  }
  std::lock_guard<std::mutex> lock(state_->mutex);
  state_->r = t;
  return t;
}

std::optional<int> GoodFiltration::first_not_in_scaled(const Ideal& q) const {
  for (int n = 0; n < tail_index(); ++n)
    if (!(q * level(n) + base()).contains(level(n + 1))) return n;
  return std::nullopt;
}

GoodFiltration scale_filtration(const GoodFiltration& f, const Ideal& q) {
  if (!q.contains(f.primary())) throw QDoesNotContainI();
  if (!is_in_maximal(q)) throw ConfigurationError("QNotProper", "q is not inside the maximal ideal");
  std::vector<Ideal> chain{Ideal::unit(f.ring_ptr())};
  for (int k = 0; k <= f.tail_index(); ++k) chain.push_back(q * f.level(k) + f.base());
  return GoodFiltration::validate(f.base(), f.primary(), chain);
}

GoodFiltration quotient_filtration(const GoodFiltration& f, const Ideal& n) {
  if (!n.contains(f.base())) throw BaseNotContained();
  std::vector<Ideal> chain;
  for (int k = 0; k <= f.tail_index(); ++k) chain.push_back(f.level(k) + n);
  return GoodFiltration::validate(n, f.primary(), chain);
}

ModuleSpec module_spec(const Ideal& j) {
  if (!j.is_homogeneous()) throw ConfigurationError("NotHomogeneous", "base ideal must be homogeneous");
  ModuleSpec s;
  s.ring = j.ring_ptr();
  s.base = j;
  const std::size_t n = j.ring().nvars();
  const SeriesPoly nj = hilbert_numerator(j);
  s.d = dimension_of(nj, n).dim;
  s.saturation = j.saturation(Ideal::maximal(j.ring_ptr()));
  s.depth_positive = s.saturation == j;
  if (!s.depth_positive) {
    SeriesPoly diff = series_sub(nj, hilbert_numerator(s.saturation));
    auto [q, times] = divide_one_minus_t(diff, static_cast<int>(n));
    if (times != static_cast<int>(n) && !q.empty())
      throw std::logic_error("local cohomology of infinite length");
    s.h0_length = static_cast<std::size_t>(series_eval_at_one(q));
  }
  return s;
}

}  // namespace filtreg
