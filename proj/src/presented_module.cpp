#include "filtreg/presented_module.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "filtreg/errors.hpp"

namespace filtreg {

namespace {

std::size_t count_standard(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool pure = false;
    for (const auto& m : leads)
      if (m.exp[v] == m.deg) pure = true;
    if (!pure) throw NotCofinite();
  }
  auto in_lead = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  if (in_lead(Monomial{})) return 0;
  std::unordered_set<Monomial, MonomialHash> seen{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  std::size_t count = 0;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      ++count;
      for (std::size_t v = 0; v < nvars; ++v) {
        Monomial w = m * Monomial::variable(v);
        if (seen.count(w) || in_lead(w)) continue;
        seen.insert(w);
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return count;
}

std::vector<Monomial> leads_of(const GroebnerBasis& gb, std::uint32_t comp) {
  std::vector<Monomial> out;
  for (const auto& g : gb.elements())
    if (g.leading().comp == comp) out.push_back(g.leading().m);
  return out;
}

}  // namespace

std::size_t standard_monomial_count(const GroebnerBasis& gb, std::size_t rank, std::size_t nvars) {
  std::size_t total = 0;
  for (std::uint32_t c = 0; c < rank; ++c) total += count_standard(leads_of(gb, c), nvars);
  return total;
}

PresentedModule::PresentedModule(RingPtr ring, std::vector<int> shifts, std::vector<FreeVector> relations)
    : ring_(std::move(ring)), shifts_(std::move(shifts)) {
  for (auto& r : relations)
    if (!r.is_zero()) relations_.push_back(std::move(r));
}

PresentedModule PresentedModule::cyclic(const Ideal& j) {
  std::vector<FreeVector> rels;
  for (const auto& g : j.basis()) rels.push_back(FreeVector::from_component(g, 0));
  return PresentedModule(j.ring_ptr(), {0}, std::move(rels));
}

const GroebnerBasis& PresentedModule::groebner() const {
  std::call_once(*once_, [this] { gb_->emplace(ring_->field(), relations_, shifts_); });
  return **gb_;
}

bool PresentedModule::is_graded() const {
  for (const auto& r : relations_)
    if (!r.is_homogeneous(shifts_)) return false;
  return true;
}

std::vector<Monomial> PresentedModule::leads_in(std::uint32_t comp) const {
  return leads_of(groebner(), comp);
}

bool PresentedModule::is_zero() const {
  for (std::uint32_t c = 0; c < rank(); ++c)
    if (!groebner().lead_divides(Monomial{}, c)) return false;
  return true;
}

std::size_t PresentedModule::graded_dim(int n) const {
  std::size_t total = 0;
  for (std::uint32_t c = 0; c < rank(); ++c) {
    const auto leads = leads_in(c);
    for (const auto& m : monomials_of_degree(ring_->nvars(), n - shifts_[c])) {
      bool hit = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          hit = true;
          break;
        }
      if (!hit) ++total;
    }
  }
  return total;
}

ShiftedSeries PresentedModule::hilbert_series() const {
  ShiftedSeries s;
  if (shifts_.empty()) return s;
  s.low = *std::min_element(shifts_.begin(), shifts_.end());
  for (std::uint32_t c = 0; c < rank(); ++c) {
    SeriesPoly n = hilbert_numerator(leads_in(c), ring_->nvars());
    s.numerator = series_add(s.numerator, series_shift(n, shifts_[c] - s.low));
  }
  return s;
}

int PresentedModule::dimension() const {
  return dimension_of(hilbert_series().numerator, ring_->nvars()).dim;
}

std::int64_t PresentedModule::degree() const {
  return dimension_of(hilbert_series().numerator, ring_->nvars()).degree;
}

std::size_t PresentedModule::length() const {
  return standard_monomial_count(groebner(), rank(), ring_->nvars());
}

std::size_t PresentedModule::length_mod(const Ideal& k) const {
  std::vector<FreeVector> gens = relations_;
  const auto kb = k.basis();
  for (std::uint32_t c = 0; c < rank(); ++c)
    for (const auto& g : kb) gens.push_back(FreeVector::from_component(g, c));
  GroebnerBasis gb(ring_->field(), std::move(gens), shifts_);
  return standard_monomial_count(gb, rank(), ring_->nvars());
}

int PresentedModule::initial_degree() const {
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t c = 0; c < rank(); ++c)
    if (!groebner().lead_divides(Monomial{}, c)) best = std::min(best, shifts_[c]);
  if (best == std::numeric_limits<int>::max())
    throw std::domain_error("initial degree of the zero module");
  return best;
}

}  // namespace filtreg
