#include "filtreg/degrees.hpp"

#include <algorithm>
#include <map>

#include "filtreg/errors.hpp"

namespace filtreg {

std::int64_t free_dim(std::size_t nvars, int k, int s) {
  const std::int64_t m = k - s;
  if (m < 0) return 0;
  // binom(m + n - 1, n - 1)
  std::int64_t r = 1;
  const auto n1 = static_cast<std::int64_t>(nvars) - 1;
  for (std::int64_t i = 1; i <= n1; ++i) r = r * (m + i) / i;
  return r;
}

std::optional<int> ResolutionData::regularity() const {
  std::optional<int> reg;
  for (std::size_t j = 0; j < shifts.size(); ++j)
    for (int s : shifts[j]) {
      const int v = s - static_cast<int>(j);
      if (!reg || v > *reg) reg = v;
    }
  return reg;
}

std::size_t ResolutionData::betti(int j, int k) const {
  if (j < 0 || j >= static_cast<int>(shifts.size())) return 0;
  const auto& s = shifts[static_cast<std::size_t>(j)];
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), k));
}

std::vector<FreeVector> minimal_generating_subset(const PrimeField& f, std::vector<FreeVector> gens,
                                                  const std::vector<int>& shifts) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const FreeVector& g) { return g.is_zero(); }),
             gens.end());
  std::stable_sort(gens.begin(), gens.end(), [&](const FreeVector& a, const FreeVector& b) {
    const int da = a.degree(shifts), db = b.degree(shifts);
    if (da != db) return da < db;
    return term_cmp(a.leading(), b.leading()) < 0;
  });
  std::vector<FreeVector> accepted;
  std::size_t i = 0;
  while (i < gens.size()) {
    const int deg = gens[i].degree(shifts);
    std::size_t end = i;
    while (end < gens.size() && gens[end].degree(shifts) == deg) ++end;
    GroebnerBasis lower(f, accepted, shifts);
    std::vector<FreeVector> forms;
    for (std::size_t k = i; k < end; ++k) forms.push_back(lower.normal_form(gens[k]));
    // Column index per (monomial, component) appearing in the normal forms.
    std::map<std::pair<std::uint32_t, std::vector<std::uint16_t>>, std::size_t> cols;
    for (const auto& v : forms)
      for (const auto& t : v.terms())
        cols.emplace(std::make_pair(t.comp, std::vector<std::uint16_t>(t.m.exp.begin(), t.m.exp.end())), 0);
    std::size_t next = 0;
    for (auto& [key, idx] : cols) idx = next++;
    Matrix rows(0, cols.size());
    std::size_t current_rank = 0;
    for (std::size_t k = 0; k < forms.size(); ++k) {
      if (forms[k].is_zero()) continue;
      std::vector<Coeff> row(cols.size(), 0);
      for (const auto& t : forms[k].terms())
        row[cols.at(std::make_pair(t.comp, std::vector<std::uint16_t>(t.m.exp.begin(), t.m.exp.end())))] = t.c;
      Matrix trial = rows;
      trial.append_row(row);
      const std::size_t r = rank(trial, f);
      if (r > current_rank) {
        current_rank = r;
        rows = std::move(trial);
        accepted.push_back(gens[i + k]);
      }
    }
    i = end;
  }
  return accepted;
}

std::vector<FreeVector> syzygies(const PrimeField& f, const std::vector<FreeVector>& vs,
                                 const std::vector<int>& shifts) {
  const auto m = static_cast<std::uint32_t>(shifts.size());
  const auto k = static_cast<std::uint32_t>(vs.size());
  std::vector<int> aug_shifts = shifts;
  std::vector<FreeVector> aug;
  for (std::uint32_t i = 0; i < k; ++i) {
    aug_shifts.push_back(vs[i].is_zero() ? 0 : vs[i].degree(shifts));
    aug.push_back(vs[i] + FreeVector::unit(f, m + i));
  }
  GroebnerBasis gb(f, std::move(aug), aug_shifts);
  std::vector<FreeVector> out;
  for (const auto& g : gb.elements())
    if (g.leading().comp >= m) out.push_back(g.restrict_components(m, m + k));
  return out;
}

namespace {

std::vector<int> degrees_of(const std::vector<FreeVector>& vs, const std::vector<int>& shifts) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(v.degree(shifts));
  return out;
}

// Transposes a map given by basis images: entries (k, l) of `images` (image
// of basis k in component l) become vectors indexed by l with component k.
std::vector<FreeVector> transpose(const PrimeField& f, const std::vector<FreeVector>& images, std::size_t cols) {
  std::vector<std::vector<Term>> out(cols);
  for (std::uint32_t k = 0; k < images.size(); ++k)
    for (const auto& t : images[k].terms()) out[t.comp].push_back(Term{t.m, k, t.c});
  std::vector<FreeVector> res;
  res.reserve(cols);
  for (auto& terms : out) res.emplace_back(f, std::move(terms));
  return res;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out;
  for (int s : v) out.push_back(-s);
  return out;
}

}  // namespace

ResolutionData minimal_resolution(const PresentedModule& m) {
  const auto& f = m.ring().field();
  ResolutionData r;
  r.shifts.push_back(m.shifts());
  r.maps.emplace_back();
  std::vector<FreeVector> current = minimal_generating_subset(f, m.relations(), m.shifts());
  const std::size_t limit = m.ring().nvars() + 2;
  while (!current.empty()) {
    if (r.shifts.size() > limit) throw std::logic_error("resolution longer than the syzygy bound");
    const std::vector<int> src_shifts = degrees_of(current, r.shifts.back());
    r.maps.push_back(current);
    r.shifts.push_back(src_shifts);
    current = minimal_generating_subset(f, syzygies(f, current, r.shifts[r.shifts.size() - 2]), src_shifts);
  }
  return r;
}

std::optional<int> reg_module(const PresentedModule& m) {
  if (m.is_zero()) return std::nullopt;
  return minimal_resolution(m).regularity();
}

bool resolution_is_exact(const ResolutionData& r, const PresentedModule& m, int up_to) {
  int low = 0;
  for (const auto& s : r.shifts)
    for (int v : s) low = std::min(low, v);
  const std::size_t n = m.ring().nvars();
  for (int k = low; k <= up_to; ++k) {
    std::int64_t alt = 0;
    for (std::size_t j = 0; j < r.shifts.size(); ++j) {
      std::int64_t dim = 0;
      for (int s : r.shifts[j]) dim += free_dim(n, k, s);
      alt += (j % 2 == 0) ? dim : -dim;
    }
    if (alt != static_cast<std::int64_t>(m.graded_dim(k))) return false;
  }
  return true;
}

PresentedModule ext_module(const PresentedModule& m, int j) {
  const auto& f = m.ring().field();
  const auto ring = m.ring_ptr();
  if (j < 0 || j > static_cast<int>(m.ring().nvars())) return PresentedModule(ring, {}, {});
  const ResolutionData r = minimal_resolution(m);
  if (j > r.length()) return PresentedModule(ring, {}, {});
  const auto uj = static_cast<std::size_t>(j);
  const std::size_t rank_j = r.shifts[uj].size();
  const std::vector<int> dual = negated(r.shifts[uj]);

  std::vector<FreeVector> cycles;
  if (uj + 1 >= r.shifts.size()) {
    for (std::uint32_t l = 0; l < rank_j; ++l) cycles.push_back(FreeVector::unit(f, l));
  } else {
    auto columns = transpose(f, r.maps[uj + 1], rank_j);
    cycles = syzygies(f, columns, negated(r.shifts[uj + 1]));
  }
  cycles = minimal_generating_subset(f, std::move(cycles), dual);
  if (cycles.empty()) return PresentedModule(ring, {}, {});

  std::vector<FreeVector> boundaries;
  if (uj >= 1) boundaries = transpose(f, r.maps[uj], r.shifts[uj - 1].size());

  std::vector<FreeVector> all = cycles;
  all.insert(all.end(), boundaries.begin(), boundaries.end());
  const auto s = static_cast<std::uint32_t>(cycles.size());
  const std::vector<int> gen_shifts = degrees_of(cycles, dual);
  std::vector<FreeVector> relations;
  for (const auto& z : syzygies(f, all, dual)) {
    FreeVector rel = z.restrict_components(0, s);
    if (!rel.is_zero()) relations.push_back(std::move(rel));
  }
  relations = minimal_generating_subset(f, std::move(relations), gen_shifts);
  return PresentedModule(ring, gen_shifts, std::move(relations));
}

Multiplicity multiplicity(const Ideal& i, const PresentedModule& m, int cap) {
  const int d = m.dimension();
  if (d < 0) return {d, 0};
  std::vector<std::int64_t> lengths;
  std::vector<std::int64_t> diffs;
  Ideal power = i;
  for (int n = 0; n <= cap; ++n) {
    if (n > 0) power = power * i;
    lengths.push_back(static_cast<std::int64_t>(m.length_mod(power)));
    if (n < d) continue;
    std::int64_t diff = 0, binom = 1;
    for (int k = 0; k <= d; ++k) {
      const std::int64_t term = binom * lengths[static_cast<std::size_t>(n - k)];
      diff += (k % 2 == 0) ? term : -term;
      binom = binom * (d - k) / (k + 1);
    }
    diffs.push_back(diff);
    const std::size_t w = static_cast<std::size_t>(d) + 2;
    if (diffs.size() >= w &&
        std::all_of(diffs.end() - static_cast<std::ptrdiff_t>(w), diffs.end(),
                    [&](std::int64_t v) { return v == diffs.back(); }) &&
        diffs.back() > 0)
      return {d, diffs.back()};
  }
  throw StabilizationNotReached("Hilbert-Samuel differences did not stabilize by n = " + std::to_string(cap));
}

ExtendedDegreeValue hdeg(const Ideal& i, const PresentedModule& m) {
  if (m.is_zero()) return {0};
  const int d = m.dimension();
  if (d == 0) return {static_cast<std::int64_t>(m.length())};
  const int n = static_cast<int>(m.ring().nvars());
  std::int64_t value = multiplicity(i, m).e;
  std::int64_t binom = 1;
  for (int k = 0; k <= d - 1; ++k) {
    PresentedModule e = ext_module(m, n + k + 1 - d);
    if (!e.is_zero()) value += binom * hdeg(i, e).value;
    binom = binom * (d - 1 - k) / (k + 1);
  }
  return {value};
}

MinimalReduction minimal_reduction(const Ideal& i, const Ideal& j, int d, CoefficientSource& src,
                                   int max_retries, int cap) {
  if (d < 1) throw InvalidDimension(d);
  const auto gens = minimal_generators(i);
  const auto ring = i.ring_ptr();
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Polynomial> qgens;
    for (int k = 0; k < d; ++k) {
      const auto c = src.draw(gens.size());
      Polynomial g = ring->zero();
      for (std::size_t t = 0; t < gens.size(); ++t) g = g + gens[t].scaled(c[t]);
      qgens.push_back(g);
    }
    Ideal q(ring, qgens);
    Ideal in = Ideal::unit(ring);  // I^n
    int streak = 0;
    for (int n = 0; n <= cap + 2; ++n) {
      Ideal next = in * i;
      if (next + j == q * in + j) {
        if (++streak == 3) return {q, n - 2, attempt};
      } else {
        streak = 0;
      }
      in = std::move(next);
    }
  }
  throw ReductionCheckFailed("no reduction found after " + std::to_string(max_retries) + " retries");
}

std::optional<int> common_generator_degree(const Ideal& i) {
  std::optional<int> deg;
  for (const auto& g : minimal_generators(i)) {
    if (!g.is_homogeneous()) return std::nullopt;
    if (deg && *deg != g.degree()) return std::nullopt;
    deg = g.degree();
  }
  return deg;
}

ScalarInvariants scalar_invariants(const Ideal& i, const ModuleSpec& spec, const std::optional<MinimalReduction>& q) {
  ScalarInvariants s;
  s.l_ai = i.colength();
  if (q) s.l_mqm = (q->q + spec.base).colength();
  s.i_m = 0;
  s.mu_m = 1;
  s.delta = common_generator_degree(i);
  s.d = spec.d;
  s.depth_positive = spec.depth_positive;
  return s;
}

}  // namespace filtreg
