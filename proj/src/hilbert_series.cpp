#include "filtreg/hilbert_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace filtreg {

namespace {

void trim(SeriesPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

SeriesPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& m : gens)
    if (m.is_one()) return {};

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    SeriesPoly acc{1};
    for (const auto& m : gens) {
      SeriesPoly factor(m.deg + 1, 0);
      factor[0] = 1;
      factor[m.deg] -= 1;
      SeriesPoly prod(acc.size() + factor.size() - 1, 0);
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < factor.size(); ++j) prod[i + j] += acc[i] * factor[j];
      acc = std::move(prod);
    }
    trim(acc);
    return acc;
  }

  // Pivot on the variable occurring in the most non-pure generators.
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& m : gens)
      if (m.exp[v] && m.exp[v] != m.deg) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  const Monomial x = Monomial::variable(best);

  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.exp[best]) {
      --q.exp[best];
      --q.deg;
    }
    colon.push_back(q);
  }
  SeriesPoly a = numerator_rec(std::move(plus), nvars);
  SeriesPoly b = series_shift(numerator_rec(std::move(colon), nvars), 1);
  return series_add(a, b);
}

}  // namespace

SeriesPoly series_add(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

SeriesPoly series_sub(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

SeriesPoly series_shift(const SeriesPoly& a, int k) {
  if (a.empty()) return a;
  if (k < 0) throw std::invalid_argument("negative series shift");
  SeriesPoly r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

std::pair<SeriesPoly, int> divide_one_minus_t(SeriesPoly a, int max_times) {
  int times = 0;
  trim(a);
  while (times < max_times && !a.empty() && series_eval_at_one(a) == 0) {
    // a = (1 - t) q  =>  q_k = sum_{i<=k} a_i
    SeriesPoly q(a.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
      run += a[k];
      q[k] = run;
    }
    a = std::move(q);
    trim(a);
    ++times;
  }
  return {a, times};
}

std::int64_t series_eval_at_one(const SeriesPoly& a) {
  std::int64_t s = 0;
  for (auto c : a) s += c;
  return s;
}

SeriesPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  return numerator_rec(std::move(gens), nvars);
}

SeriesPoly hilbert_numerator(const Ideal& j) {
  return hilbert_numerator(j.leading_monomials(), j.ring().nvars());
}

SeriesDimension dimension_of(const SeriesPoly& numerator, std::size_t nvars) {
  if (numerator.empty()) return {-1, 0};
  const int n = static_cast<int>(nvars);
  auto [q, times] = divide_one_minus_t(numerator, n);
  return {n - times, series_eval_at_one(q)};
}

}  // namespace filtreg
