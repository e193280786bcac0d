#include "filtreg/graded_model.hpp"

#include <unordered_set>

#include "filtreg/errors.hpp"

namespace filtreg {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::AssocGraded: return "assocGraded";
    case ModelKind::FiberCone: return "fiberCone";
    case ModelKind::AmbientG: return "ambientG";
  }
  return "unknown";
}

namespace {

Piece make_piece(int degree, Ideal upper, Ideal lower) {
  Piece p;
  p.degree = degree;
  p.upper = std::move(upper);
  p.lower = std::move(lower);
  const GroebnerBasis& gu = p.upper.groebner();
  for (const auto& m : p.lower.standard_monomials())
    if (gu.lead_divides(m, 0)) p.basis.push_back(m);
  const auto& f = p.upper.ring().field();
  p.lifts.reserve(p.basis.size());
  for (std::size_t j = 0; j < p.basis.size(); ++j) {
    Polynomial m = Polynomial::monomial(f, p.basis[j]);
    p.lifts.push_back(m - p.upper.normal_form(m));
    p.index.emplace(p.basis[j], j);
  }
  return p;
}

std::vector<Coeff> piece_coordinates(const Piece& p, const Polynomial& w) {
  std::vector<Coeff> out(p.basis.size(), 0);
  const Polynomial nf = p.lower.normal_form(w);
  for (const auto& t : nf.terms()) {
    auto it = p.index.find(t.m);
    if (it != p.index.end()) out[it->second] = t.c;
  }
  return out;
}

}  // namespace

GradedPieceModule GradedPieceModule::assoc_graded(const GoodFiltration& f, int cutoff) {
  return GradedPieceModule(std::shared_ptr<State>(new State{ModelKind::AssocGraded, f, std::nullopt, cutoff, {}, {}}));
}

GradedPieceModule GradedPieceModule::fiber_cone(const GoodFiltration& f, const Ideal& q, int cutoff) {
  if (!q.contains(f.primary())) throw QDoesNotContainI();
  if (auto n = f.first_not_in_scaled(q)) throw HypothesisFails(*n);
  return GradedPieceModule(std::shared_ptr<State>(new State{ModelKind::FiberCone, f, q, cutoff, {}, {}}));
}

GradedPieceModule GradedPieceModule::ambient(const Ideal& i, int cutoff) {
  auto f = GoodFiltration::adic(Ideal::zero(i.ring_ptr()), i);
  return GradedPieceModule(std::shared_ptr<State>(new State{ModelKind::AmbientG, f, std::nullopt, cutoff, {}, {}}));
}

Piece GradedPieceModule::build(int n) const {
  const auto& src = s_->source;
  if (s_->kind == ModelKind::FiberCone) {
    Ideal upper = src.level(n);
    Ideal lower = *s_->q * upper + src.base();
    return make_piece(n, std::move(upper), std::move(lower));
  }
  return make_piece(n, src.level(n), src.level(n + 1));
}

const Piece& GradedPieceModule::piece(int n) const {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > s_->cutoff) throw CutoffTooSmall(n);
  const auto un = static_cast<std::size_t>(n);
  {
    std::lock_guard<std::mutex> lock(s_->mutex);
    if (un < s_->pieces.size() && s_->pieces[un]) return *s_->pieces[un];
  }
  auto built = std::make_unique<Piece>(build(n));
  std::lock_guard<std::mutex> lock(s_->mutex);
  if (s_->pieces.size() <= un) s_->pieces.resize(un + 1);
  if (!s_->pieces[un]) s_->pieces[un] = std::move(built);
  return *s_->pieces[un];
}

void GradedPieceModule::prepare(int n) const {
  if (n > s_->cutoff) throw CutoffTooSmall(n);
  // Tail levels are built sequentially by the filtration.
  s_->source.level(n + 1);
  std::vector<int> missing;
  {
    std::lock_guard<std::mutex> lock(s_->mutex);
    for (int k = 0; k <= n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (uk >= s_->pieces.size() || !s_->pieces[uk]) missing.push_back(k);
    }
  }
  const auto count = static_cast<std::ptrdiff_t>(missing.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) piece(missing[static_cast<std::size_t>(i)]);
}

std::vector<Coeff> GradedPieceModule::coordinates(const Polynomial& w, int n) const {
  return piece_coordinates(piece(n), w);
}

Matrix GradedPieceModule::multiplication(const Polynomial& x, int n) const {
  const Piece& src = piece(n);
  const Piece& dst = piece(n + 1);
  Matrix m(dst.basis.size(), src.basis.size());
  for (std::size_t j = 0; j < src.lifts.size(); ++j) {
    auto col = piece_coordinates(dst, x * src.lifts[j]);
    for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<Coeff> CoefficientSource::draw(std::size_t count) {
  std::vector<Coeff> out;
  if (scripted_used_ < script_.size()) {
    out = script_[scripted_used_++];
    out.resize(count, 1);
    return out;
  }
  const std::uint32_t p = field_.characteristic();
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<Coeff>(rng_() % (p - 1) + 1));
  return out;
}

std::vector<Polynomial> minimal_generators(const Ideal& i) {
  Ideal mi = Ideal::maximal(i.ring_ptr()) * i;
  Piece p = make_piece(1, i, mi);
  const auto& f = i.ring().field();
  std::vector<Polynomial> candidates = i.generators();
  for (auto& g : i.basis()) candidates.push_back(std::move(g));
  std::vector<Polynomial> out;
  Matrix rows(0, p.basis.size());
  for (const auto& g : candidates) {
    if (out.size() == p.basis.size()) break;
    Matrix trial = rows;
    trial.append_row(piece_coordinates(p, g));
    if (rank(trial, f) > out.size()) {
      rows = std::move(trial);
      out.push_back(g);
    }
  }
  return out;
}

FilterRegularity is_filter_regular(const Polynomial& x, const GradedPieceModule& e, int window, int limit) {
  FilterRegularity res;
  const auto& f = x.field();
  const int bound = e.generation_bound();
  int zero_run = 0;
  limit = std::min(limit, e.cutoff() - 1);
  for (int n = 0; n <= limit; ++n) {
    const std::size_t dn = e.dim(n);
    std::size_t kernel = dn == 0 ? 0 : dn - rank(e.multiplication(x, n), f);
    res.checked_to = n;
    if (kernel > 0) {
      res.witness = n;
      zero_run = 0;
    } else {
      ++zero_run;
    }
    if (zero_run >= window && n >= bound) {
      res.regular = true;
      return res;
    }
  }
  return res;
}

GenericElement sample_generic(const Ideal& i, const std::vector<const GradedPieceModule*>& targets,
                              CoefficientSource& src, std::uint64_t seed, int max_retries, int window,
                              int limit) {
  const auto gens = minimal_generators(i);
  const Ideal mi = Ideal::maximal(i.ring_ptr()) * i;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    const auto coeffs = src.draw(gens.size());
    Polynomial x = i.ring().zero();
    for (std::size_t k = 0; k < gens.size(); ++k) x = x + gens[k].scaled(coeffs[k]);
    if (!i.contains(x) || mi.contains(x)) continue;
    bool ok = true;
    for (const auto* t : targets)
      if (!is_filter_regular(x, *t, window, limit).regular) {
        ok = false;
        break;
      }
    if (ok) return GenericElement{x, seed, attempt};
  }
  throw GenericityFailure("no filter-regular element found after " + std::to_string(max_retries) +
                          " retries");
}

SinghSides singh_identity(const GoodFiltration& f, const Polynomial& x, int n) {
  const auto len = [](const Ideal& i) { return static_cast<std::int64_t>(i.colength()); };
  const Ideal wn = f.level(n);
  const Ideal wn1 = f.level(n + 1);
  const Ideal xi(f.ring_ptr(), std::vector<Polynomial>{x});
  const std::int64_t lhs = len(wn1) - len(wn);
  const std::int64_t colon_term = len(wn) - len(wn1.colon(x));
  return SinghSides{lhs, len(wn1 + xi) - colon_term};
}

}  // namespace filtreg
