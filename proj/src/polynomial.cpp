#include "filtreg/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace filtreg {

namespace detail {

void normalize(std::vector<Term>& terms, const PrimeField& f) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return term_cmp(a, b) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i];
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].comp == t.comp && terms[j].m == t.m) {
      t.c = f.add(t.c, terms[j].c);
      ++j;
    }
    if (t.c != 0) terms[out++] = t;
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> add(std::span<const Term> a, std::span<const Term> b, const PrimeField& f) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = term_cmp(a[i], b[j]);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
    } else {
      Coeff s = f.add(a[i].c, b[j].c);
      if (s != 0) r.push_back(Term{a[i].m, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  r.insert(r.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  r.insert(r.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return r;
}

std::vector<Term> sub_mul(std::span<const Term> a, Coeff c, const Monomial& mono,
                          std::span<const Term> b, const PrimeField& f) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  const Coeff nc = f.neg(c);
  std::size_t i = 0, j = 0;
  Term bj;
  auto load = [&](std::size_t k) {
    bj = Term{b[k].m * mono, b[k].comp, f.mul(b[k].c, nc)};
  };
  if (j < b.size()) load(j);
  while (i < a.size() && j < b.size()) {
    int cmp = term_cmp(a[i], bj);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back(bj);
      if (++j < b.size()) load(j);
    } else {
      Coeff s = f.add(a[i].c, bj.c);
      if (s != 0) r.push_back(Term{a[i].m, a[i].comp, s});
      ++i;
      if (++j < b.size()) load(j);
    }
  }
  r.insert(r.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  while (j < b.size()) {
    r.push_back(bj);
    if (++j < b.size()) load(j);
  }
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FreeVector

FreeVector::FreeVector(const PrimeField& f, std::vector<Term> terms)
    : field_(f), terms_(std::move(terms)) {
  detail::normalize(terms_, field_);
}

FreeVector FreeVector::from_component(const Polynomial& p, std::uint32_t comp) {
  FreeVector v(p.field());
  v.terms_ = p.terms();
  for (auto& t : v.terms_) t.comp = comp;
  return v;
}

FreeVector FreeVector::unit(const PrimeField& f, std::uint32_t comp) {
  FreeVector v(f);
  v.terms_.push_back(Term{Monomial{}, comp, 1});
  return v;
}

Polynomial FreeVector::component(std::uint32_t comp) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.comp == comp) out.push_back(Term{t.m, 0, t.c});
  return Polynomial(field_, std::move(out));
}

std::uint32_t FreeVector::support_rank() const noexcept {
  std::uint32_t r = 0;
  for (const auto& t : terms_) r = std::max(r, t.comp + 1);
  return r;
}

int FreeVector::degree(std::span<const int> shifts) const {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) {
    int s = t.comp < shifts.size() ? shifts[t.comp] : 0;
    d = std::max(d, static_cast<int>(t.m.deg) + s);
  }
  return d;
}

bool FreeVector::is_homogeneous(std::span<const int> shifts) const {
  if (terms_.empty()) return true;
  auto deg_of = [&](const Term& t) {
    return static_cast<int>(t.m.deg) + (t.comp < shifts.size() ? shifts[t.comp] : 0);
  };
  const int d0 = deg_of(terms_.front());
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return deg_of(t) == d0; });
}

FreeVector FreeVector::scaled(Coeff c) const {
  FreeVector v(field_);
  if (c == 0) return v;
  v.terms_ = terms_;
  for (auto& t : v.terms_) t.c = field_.mul(t.c, c);
  return v;
}

FreeVector FreeVector::times(const Monomial& m, Coeff c) const {
  FreeVector v(field_);
  if (c == 0) return v;
  v.terms_.reserve(terms_.size());
  for (const auto& t : terms_) v.terms_.push_back(Term{t.m * m, t.comp, field_.mul(t.c, c)});
  return v;
}

FreeVector FreeVector::times(const Polynomial& p) const {
  std::vector<Term> out;
  out.reserve(terms_.size() * p.terms().size());
  for (const auto& s : p.terms())
    for (const auto& t : terms_) out.push_back(Term{t.m * s.m, t.comp, field_.mul(t.c, s.c)});
  return FreeVector(field_, std::move(out));
}

FreeVector FreeVector::shifted_components(std::int64_t offset) const {
  FreeVector v(field_);
  v.terms_ = terms_;
  for (auto& t : v.terms_) t.comp = static_cast<std::uint32_t>(t.comp + offset);
  return v;
}

FreeVector FreeVector::restrict_components(std::uint32_t from, std::uint32_t to) const {
  FreeVector v(field_);
  for (const auto& t : terms_)
    if (t.comp >= from && t.comp < to) v.terms_.push_back(Term{t.m, t.comp - from, t.c});
  return v;
}

FreeVector FreeVector::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().c));
}

FreeVector operator+(const FreeVector& a, const FreeVector& b) {
  FreeVector v(a.field_);
  v.terms_ = detail::add(a.terms_, b.terms_, a.field_);
  return v;
}

FreeVector operator-(const FreeVector& a, const FreeVector& b) {
  FreeVector v(a.field_);
  v.terms_ = detail::sub_mul(a.terms_, 1, Monomial{}, b.terms_, a.field_);
  return v;
}

FreeVector operator-(const FreeVector& a) { return a.scaled(a.field_.neg(1)); }

bool operator==(const FreeVector& a, const FreeVector& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto &x = a.terms_[i], &y = b.terms_[i];
    if (x.comp != y.comp || x.c != y.c || x.m != y.m) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const PrimeField& f, std::vector<Term> terms)
    : field_(f), terms_(std::move(terms)) {
  for (auto& t : terms_) t.comp = 0;
  detail::normalize(terms_, field_);
}

Polynomial Polynomial::constant(const PrimeField& f, std::int64_t c) {
  Polynomial p(f);
  Coeff v = f.from_int(c);
  if (v != 0) p.terms_.push_back(Term{Monomial{}, 0, v});
  return p;
}

Polynomial Polynomial::monomial(const PrimeField& f, const Monomial& m, Coeff c) {
  Polynomial p(f);
  if (c != 0) p.terms_.push_back(Term{m, 0, c});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d0 = terms_.front().m.deg;
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.m.deg == d0; });
}

Coeff Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return 0;
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial p(field_);
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.c = field_.mul(t.c, c);
  return p;
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  Polynomial p(field_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.m * m, 0, field_.mul(t.c, c)});
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial p(a.field_);
  p.terms_ = detail::add(a.terms_, b.terms_, a.field_);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial p(a.field_);
  p.terms_ = detail::sub_mul(a.terms_, 1, Monomial{}, b.terms_, a.field_);
  return p;
}

Polynomial operator-(const Polynomial& a) { return a.scaled(a.field_.neg(1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back(Term{s.m * t.m, 0, a.field_.mul(s.c, t.c)});
  return Polynomial(a.field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].c != b.terms_[i].c || a.terms_[i].m != b.terms_[i].m) return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(field_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

}  // namespace filtreg
