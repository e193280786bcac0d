#include "filtreg/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "filtreg/errors.hpp"

namespace filtreg {

namespace {

std::vector<FreeVector> as_vectors(const std::vector<Polynomial>& ps, std::uint32_t comp) {
  std::vector<FreeVector> out;
  out.reserve(ps.size());
  for (const auto& p : ps)
    if (!p.is_zero()) out.push_back(FreeVector::from_component(p, comp));
  return out;
}

// Entries in component 1 of basis elements free of component 0.
std::vector<Polynomial> second_component_elimination(const PrimeField& f,
                                                     std::vector<FreeVector> gens) {
  GroebnerBasis gb(f, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements())
    if (g.leading().comp == 1) out.push_back(g.component(1));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

Ideal::Ideal(RingPtr ring, const std::vector<std::string>& gens) : ring_(std::move(ring)) {
  for (const auto& s : gens) {
    Polynomial p = ring_->parse(s);
    if (!p.is_zero()) gens_.push_back(std::move(p));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = ring->one();
  return Ideal(std::move(ring), std::vector<Polynomial>{one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->var(i));
  return Ideal(std::move(ring), std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    cache_->gb.emplace(ring_->field(), as_vectors(gens_, 0));
  });
  return *cache_->gb;
}

std::vector<Polynomial> Ideal::basis() const {
  std::vector<Polynomial> out;
  for (const auto& g : groebner().elements()) out.push_back(g.component(0));
  return out;
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner().elements()) out.push_back(g.leading().m);
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (f.is_zero() || gens_.empty()) return f;
  return groebner().normal_form(FreeVector::from_component(f, 0)).component(0);
}

bool Ideal::contains(const Ideal& other) const {
  if (other.gens_.empty()) return true;
  const auto& gb = groebner();
  if (gb.empty()) return other.is_zero();
  for (const auto& g : other.basis())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const { return groebner().empty(); }

bool Ideal::is_unit() const {
  const auto& e = groebner().elements();
  return e.size() == 1 && e.front().leading().m.is_one();
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : basis())
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::is_monomial() const {
  for (const auto& g : basis())
    if (!g.is_monomial()) return false;
  return true;
}

bool operator==(const Ideal& a, const Ideal& b) { return a.groebner() == b.groebner(); }

Ideal operator+(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.basis();
  for (auto& g : b.basis()) gens.push_back(std::move(g));
  return Ideal(a.ring_, std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  const auto ga = a.basis();
  const auto gb = b.basis();
  std::vector<Polynomial> gens;
  gens.reserve(ga.size() * gb.size());
  for (const auto& x : ga)
    for (const auto& y : gb) gens.push_back(x * y);
  return Ideal(a.ring_, std::move(gens));
}

Ideal Ideal::times(const Polynomial& f) const {
  std::vector<Polynomial> gens;
  for (const auto& g : basis()) gens.push_back(g * f);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::intersect(const Ideal& b) const {
  if (is_zero() || b.is_zero()) return zero(ring_);
  if (is_unit()) return b;
  if (b.is_unit()) return *this;
  const auto& f = ring_->field();
  std::vector<FreeVector> gens;
  for (const auto& p : basis())
    gens.push_back(FreeVector::from_component(p, 0) + FreeVector::from_component(p, 1));
  for (const auto& q : b.basis()) gens.push_back(FreeVector::from_component(q, 0));
  return Ideal(ring_, second_component_elimination(f, std::move(gens)));
}

Ideal Ideal::colon(const Polynomial& f) const {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (is_zero()) return *this;
  const auto& fld = ring_->field();
  std::vector<FreeVector> gens;
  gens.push_back(FreeVector::from_component(f, 0) + FreeVector::unit(fld, 1));
  for (const auto& g : basis()) gens.push_back(FreeVector::from_component(g, 0));
  return Ideal(ring_, second_component_elimination(fld, std::move(gens)));
}

Ideal Ideal::colon(const Ideal& b) const {
  const auto gens = b.basis();
  if (gens.empty()) return unit(ring_);
  Ideal acc = colon(gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) acc = acc.intersect(colon(gens[i]));
  return acc;
}

Ideal Ideal::saturation(const Ideal& b) const {
  Ideal cur = *this;
  for (;;) {
    Ideal next = cur.colon(b);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Ideal Ideal::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  Ideal acc = unit(ring_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool Ideal::is_cofinite() const {
  const auto leads = leading_monomials();
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    bool found = false;
    for (const auto& m : leads)
      if (m.exp[v] == m.deg) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

std::vector<Monomial> Ideal::standard_monomials() const {
  if (!is_cofinite()) throw NotCofinite();
  const auto leads = leading_monomials();
  auto in_lead = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier;
  if (!in_lead(Monomial{})) frontier.push_back(Monomial{});
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      out.push_back(m);
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        Monomial w = m * Monomial::variable(v);
        if (seen.count(w) || in_lead(w)) continue;
        seen.insert(w);
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

std::size_t Ideal::colength() const { return standard_monomials().size(); }

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  Monomial cur;
  // Enumerate compositions of n into nvars parts.
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == nvars) {
      cur.exp[v] = static_cast<std::uint16_t>(left);
      cur.deg = static_cast<std::uint32_t>(n);
      out.push_back(cur);
      cur.exp[v] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.exp[v] = static_cast<std::uint16_t>(e);
      self(self, v + 1, left - e);
    }
    cur.exp[v] = 0;
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; });
  return out;
}

std::vector<Monomial> Ideal::standard_monomials_of_degree(int n) const {
  const auto leads = leading_monomials();
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(ring_->nvars(), n)) {
    bool hit = false;
    for (const auto& l : leads)
      if (l.divides(m)) {
        hit = true;
        break;
      }
    if (!hit) out.push_back(m);
  }
  return out;
}

int Ideal::dimension() const {
  if (is_unit()) return -1;
  const auto leads = leading_monomials();
  const std::size_t n = ring_->nvars();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool free = true;
    for (const auto& l : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v)
        if (l.exp[v] && !(s & (1u << v))) {
          inside = false;
          break;
        }
      if (inside) {
        free = false;
        break;
      }
    }
    if (free) best = size;
  }
  return best;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += ring_->to_string(gens_[i]);
  }
  return out + ")";
}

}  // namespace filtreg
