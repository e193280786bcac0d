#include "filtreg/groebner.hpp"

#include <algorithm>
#include <limits>

namespace filtreg {

GbStats& gb_stats() {
  static GbStats stats;
  return stats;
}

void reset_gb_stats() {
  auto& s = gb_stats();
  s.bases = 0;
  s.pairs = 0;
  s.reductions = 0;
  s.zero_reductions = 0;
}

namespace {

// Bit i set iff variable i occurs; a cheap necessary condition for divisibility.
std::uint32_t support_mask(const Monomial& m) noexcept {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.exp[i]) s |= 1u << i;
  return s;
}

struct Lead {
  Monomial m;
  std::uint32_t comp;
  std::uint32_t mask;
};

class ReducerSet {
 public:
  void add(const FreeVector* v) {
    const Term& t = v->leading();
    leads_.push_back(Lead{t.m, t.comp, support_mask(t.m)});
    polys_.push_back(v);
  }

  const FreeVector* find(const Term& t) const noexcept {
    const std::uint32_t mask = support_mask(t.m);
    for (std::size_t i = 0; i < leads_.size(); ++i) {
      const Lead& l = leads_[i];
      if (l.comp == t.comp && (l.mask & ~mask) == 0 && l.m.divides(t.m)) return polys_[i];
    }
    return nullptr;
  }

 private:
  std::vector<Lead> leads_;
  std::vector<const FreeVector*> polys_;
};

// Reduces the terms of `terms` from position `start` onward.
std::vector<Term> reduce_from(std::vector<Term> terms, std::size_t start, const ReducerSet& rs,
                              const PrimeField& f, bool top_only) {
  std::size_t idx = start;
  std::uint64_t steps = 0;
  while (idx < terms.size()) {
    const Term t = terms[idx];
    const FreeVector* g = rs.find(t);
    if (!g) {
      if (top_only) break;
      ++idx;
      continue;
    }
    const Term& lg = g->leading();
    const Coeff c = f.mul(t.c, f.inv(lg.c));
    const Monomial q = lg.m.quotient_of(t.m);
    std::span<const Term> head(terms.data(), idx);
    std::span<const Term> rest(terms.data() + idx, terms.size() - idx);
    std::vector<Term> reduced = detail::sub_mul(rest, c, q, g->terms(), f);
    std::vector<Term> merged;
    merged.reserve(head.size() + reduced.size());
    merged.insert(merged.end(), head.begin(), head.end());
    merged.insert(merged.end(), reduced.begin(), reduced.end());
    terms = std::move(merged);
    ++steps;
  }
  gb_stats().reductions += steps;
  return terms;
}

int sugar_of(const FreeVector& v, const std::vector<int>& shifts) {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : v.terms()) {
    int s = t.comp < shifts.size() ? shifts[t.comp] : 0;
    d = std::max(d, static_cast<int>(t.m.deg) + s);
  }
  return d;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

bool pair_before(const Pair& a, const Pair& b) noexcept {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.comp != b.comp) return a.comp > b.comp;
  int c = grevlex_cmp(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class Engine {
 public:
  Engine(const PrimeField& f, std::vector<int> shifts, bool rank_one)
      : f_(f), shifts_(std::move(shifts)), rank_one_(rank_one) {}

  void insert(FreeVector h) {
    h = h.monic();
    const std::size_t hi = basis_.size();
    const Term lh = h.leading();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar_of(basis_.back(), shifts_));
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Term& lg = basis_[g].leading();
      if (lg.comp != lh.comp) continue;
      c.push_back(make_pair(g, hi));
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      const Term& lg = basis_[p.i].leading();
      bool keep = rank_one_ && coprime(lg.m, lh.m);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(p.lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (const Pair& p : pairs_) {
      if (p.comp == lh.comp && lh.m.divides(p.lcm)) {
        const Monomial l1 = lcm(basis_[p.i].leading().m, lh.m);
        const Monomial l2 = lcm(basis_[p.j].leading().m, lh.m);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      kept.push_back(p);
    }
    for (const Pair& p : d) {
      if (rank_one_ && coprime(basis_[p.i].leading().m, lh.m)) continue;
      kept.push_back(p);
    }
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && basis_[g].leading().comp == lh.comp && lh.m.divides(basis_[g].leading().m)) {
        active_[g] = false;
      }
    }
  }

  void add_input(const FreeVector& g) {
    ReducerSet rs = reducers();
    std::vector<Term> r = reduce_from(g.terms(), 0, rs, f_, true);
    if (r.empty()) return;
    FreeVector h(f_);
    h.mutable_terms() = std::move(r);
    insert(std::move(h));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      ++gb_stats().pairs;

      const FreeVector& a = basis_[p.i];
      const FreeVector& b = basis_[p.j];
      const Monomial ua = a.leading().m.quotient_of(p.lcm);
      const Monomial ub = b.leading().m.quotient_of(p.lcm);
      // a, b are monic.
      std::vector<Term> s = detail::sub_mul(a.times(ua, 1).terms(), 1, ub, b.terms(), f_);
      ReducerSet rs = reducers();
      std::vector<Term> r = reduce_from(std::move(s), 0, rs, f_, true);
      if (r.empty()) {
        ++gb_stats().zero_reductions;
        continue;
      }
      FreeVector h(f_);
      h.mutable_terms() = std::move(r);
      insert(std::move(h));
    }
  }

  std::vector<FreeVector> reduced_basis() const {
    std::vector<const FreeVector*> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) minimal.push_back(&basis_[i]);
    std::vector<FreeVector> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      ReducerSet rs;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) rs.add(minimal[j]);
      std::vector<Term> t = reduce_from(minimal[i]->terms(), 1, rs, f_, false);
      FreeVector v(f_);
      v.mutable_terms() = std::move(t);
      out.push_back(v.monic());
    }
    std::sort(out.begin(), out.end(), [](const FreeVector& x, const FreeVector& y) {
      return term_cmp(x.leading(), y.leading()) > 0;
    });
    return out;
  }

 private:
  Pair make_pair(std::size_t i, std::size_t j) const {
    const Term& a = basis_[i].leading();
    const Term& b = basis_[j].leading();
    Monomial l = lcm(a.m, b.m);
    int s = std::max(sugar_[i] + static_cast<int>(l.deg - a.m.deg),
                     sugar_[j] + static_cast<int>(l.deg - b.m.deg));
    return Pair{i, j, l, a.comp, s};
  }

  ReducerSet reducers() const {
    ReducerSet rs;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) rs.add(&basis_[i]);
    return rs;
  }

  PrimeField f_;
  std::vector<int> shifts_;
  bool rank_one_;
  std::vector<FreeVector> basis_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

FreeVector reduce_full(const FreeVector& v, const std::vector<FreeVector>& reducers) {
  ReducerSet rs;
  for (const auto& g : reducers)
    if (!g.is_zero()) rs.add(&g);
  FreeVector out(v.field());
  out.mutable_terms() = reduce_from(v.terms(), 0, rs, v.field(), false);
  return out;
}

GroebnerBasis::GroebnerBasis(const PrimeField& f, std::vector<FreeVector> gens,
                             std::vector<int> shifts) {
  ++gb_stats().bases;
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const FreeVector& g) { return g.is_zero(); }),
             gens.end());
  if (gens.empty()) return;
  std::uint32_t rank = 0;
  for (const auto& g : gens) rank = std::max(rank, g.support_rank());
  Engine engine(f, std::move(shifts), rank <= 1);
  std::sort(gens.begin(), gens.end(), [](const FreeVector& x, const FreeVector& y) {
    return term_cmp(x.leading(), y.leading()) < 0;
  });
  for (auto& g : gens) engine.add_input(g);
  engine.run();
  elems_ = engine.reduced_basis();
}

FreeVector GroebnerBasis::normal_form(const FreeVector& v) const {
  if (elems_.empty() || v.is_zero()) return v;
  return reduce_full(v, elems_);
}

bool GroebnerBasis::lead_divides(const Monomial& m, std::uint32_t comp) const noexcept {
  for (const auto& g : elems_) {
    const Term& t = g.leading();
    if (t.comp == comp && t.m.divides(m)) return true;
  }
  return false;
}

}  // namespace filtreg
