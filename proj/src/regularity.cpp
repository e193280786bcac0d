#include "filtreg/regularity.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "filtreg/degrees.hpp"
#include "filtreg/errors.hpp"

namespace filtreg {

EndDegree max_end(EndDegree a, EndDegree b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

EndDegree shift_end(EndDegree a, int k) {
  if (!a) return a;
  return *a + k;
}

namespace {

std::string show(EndDegree a) { return a ? std::to_string(*a) : "-inf"; }

/// Spans S^{(i)}_n = (z_1..z_i)E_{n-1} inside E_n and the multiplication maps of the z_j,
/// memoized by degree.
class SequenceState {
 public:
  SequenceState(const GradedPieceModule& e, const PrimeField& f) : e_(e), f_(f) {}

  std::size_t length() const noexcept { return zs_.size(); }
  const std::vector<Polynomial>& elements() const noexcept { return zs_; }

  void push(Polynomial z) {
    zs_.push_back(std::move(z));
    mats_.emplace_back();
    spans_.emplace_back();
  }
  void pop() {
    zs_.pop_back();
    mats_.pop_back();
    spans_.pop_back();
  }

  const Matrix& mat(std::size_t j, int n) {
    auto& row = mats_[j];
    const auto un = static_cast<std::size_t>(n);
    if (row.size() <= un) row.resize(un + 1);
    if (!row[un]) row[un] = e_.multiplication(zs_[j], n);
    return *row[un];
  }

  /// Echelon basis of S^{(i)}_n.
  const Echelon& span(std::size_t i, int n) {
    if (i == 0) {
      const auto un = static_cast<std::size_t>(n);
      if (zero_.size() <= un) zero_.resize(un + 1);
      if (!zero_[un]) zero_[un] = Echelon{Matrix(0, e_.dim(n)), {}};
      return *zero_[un];
    }
    auto& row = spans_[i - 1];
    const auto un = static_cast<std::size_t>(n);
    if (row.size() <= un) row.resize(un + 1);
    if (row[un]) return *row[un];
    const Echelon& prev = span(i - 1, n);
    Matrix stacked = prev.form;
    if (n > 0) {
      const Matrix& m = mat(i - 1, n - 1);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<Coeff> col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
        stacked.append_row(col);
      }
    }
    if (stacked.rows() == 0) stacked = Matrix(0, e_.dim(n));
    row[un] = rref(std::move(stacked), f_);
    return *row[un];
  }

  std::size_t quotient_dim(std::size_t i, int n) { return e_.dim(n) - span(i, n).rank(); }

  /// dim of (0 :_{E_i} z_{i+1}) in degree n.
  std::size_t kernel_dim(std::size_t i, int n) {
    const std::size_t image = span(i + 1, n + 1).rank() - span(i, n + 1).rank();
    return quotient_dim(i, n) - image;
  }

 private:
  const GradedPieceModule& e_;
  const PrimeField& f_;
  std::vector<Polynomial> zs_;
  std::vector<std::vector<std::optional<Matrix>>> mats_;
  std::vector<std::vector<std::optional<Echelon>>> spans_;
  std::vector<std::optional<Echelon>> zero_;
};

EndDegree last_nonzero_kernel(SequenceState& st, std::size_t i, int upto) {
  for (int n = upto; n >= 0; --n)
    if (st.kernel_dim(i, n) != 0) return n;
  return std::nullopt;
}

/// Presentation of E over P = K[z_1..z_l] with generators lifting a basis of E/(z)E.
PresentedModule present_over_sequence(SequenceState& st, const GradedPieceModule& e, const PrimeField& f,
                                      int top, int relation_degree) {
  const std::size_t l = st.length();
  std::vector<std::string> names;
  for (std::size_t j = 0; j < l; ++j) names.push_back("z" + std::to_string(j + 1));
  RingPtr p = make_ring(f.characteristic(), names);

  struct Gen {
    int degree;
    std::vector<Coeff> vec;
    std::unordered_map<Monomial, std::vector<Coeff>, MonomialHash> images;
  };
  std::vector<Gen> gens;
  for (int n = 0; n <= top; ++n) {
    const Echelon& s = st.span(l, n);
    std::vector<bool> pivot(e.dim(n), false);
    for (auto c : s.pivots) pivot[c] = true;
    for (std::size_t c = 0; c < pivot.size(); ++c) {
      if (pivot[c]) continue;
      Gen g{n, std::vector<Coeff>(pivot.size(), 0), {}};
      g.vec[c] = 1;
      g.images.emplace(Monomial{}, g.vec);
      gens.push_back(std::move(g));
    }
  }
  std::vector<int> shifts;
  for (const auto& g : gens) shifts.push_back(g.degree);

  auto image = [&](Gen& g, const Monomial& a) -> const std::vector<Coeff>& {
    auto it = g.images.find(a);
    if (it != g.images.end()) return it->second;
    std::size_t j = 0;
    while (a.exp[j] == 0) ++j;
    Monomial b = a;
    --b.exp[j];
    --b.deg;
    const std::vector<Coeff>& src = g.images.at(b);
    const Matrix& m = st.mat(j, g.degree + static_cast<int>(b.deg));
    std::vector<Coeff> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Coeff acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (src[c]) acc = f.add(acc, f.mul(m.at(r, c), src[c]));
      out[r] = acc;
    }
    return g.images.emplace(a, std::move(out)).first->second;
  };

  std::vector<FreeVector> relations;
  std::vector<FreeVector> previous_kernel;
  for (int n = 0; n <= relation_degree; ++n) {
    std::vector<std::pair<std::size_t, Monomial>> cols;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_of;
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> col_index(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].degree > n) continue;
      // Images are built in increasing monomial degree so each predecessor exists.
      for (int k = 0; k <= n - gens[g].degree; ++k)
        for (const auto& a : monomials_of_degree(l, k)) image(gens[g], a);
      for (const auto& a : monomials_of_degree(l, n - gens[g].degree)) {
        col_index[g].emplace(a, cols.size());
        cols.emplace_back(g, a);
      }
    }
    if (cols.empty()) {
      previous_kernel.clear();
      continue;
    }
    const std::size_t en = e.dim(n);
    Matrix phi(en, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& img = gens[cols[c].first].images.at(cols[c].second);
      for (std::size_t r = 0; r < en; ++r) phi.at(r, c) = img[r];
    }
    const Matrix kernel = nullspace(phi, f);

    auto to_vector = [&](const Coeff* row) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (row[c]) terms.push_back(Term{cols[c].second, static_cast<std::uint32_t>(cols[c].first), row[c]});
      return FreeVector(p->field(), std::move(terms));
    };
    auto to_coords = [&](const FreeVector& v) {
      std::vector<Coeff> out(cols.size(), 0);
      for (const auto& t : v.terms()) out[col_index[t.comp].at(t.m)] = t.c;
      return out;
    };

    Matrix old(0, cols.size());
    for (const auto& v : previous_kernel)
      for (std::size_t j = 0; j < l; ++j) old.append_row(to_coords(v.times(Monomial::variable(j), 1)));
    Echelon known = rref(old, f);
    std::vector<FreeVector> current;
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
      std::vector<Coeff> row(kernel.row(k), kernel.row(k) + cols.size());
      current.push_back(to_vector(row.data()));
      auto rest = reduce_by(known, row, f);
      if (std::all_of(rest.begin(), rest.end(), [](Coeff c) { return c == 0; })) continue;
      relations.push_back(current.back());
      Matrix grown = known.form;
      grown.append_row(row);
      known = rref(std::move(grown), f);
    }
    previous_kernel = std::move(current);
  }
  return PresentedModule(p, std::move(shifts), std::move(relations));
}

}  // namespace

RegularityData regularity(const GradedPieceModule& e, CoefficientSource& src, const RegularityOptions& opt) {
  const GoodFiltration& source = e.source();
  const Ideal& i_ideal = source.primary();
  const auto& f = i_ideal.ring().field();
  const int dim_m = source.base().dimension();
  const int r = e.generation_bound();

  RegularityData out;
  out.window = opt.window > 0 ? opt.window : std::max(4, dim_m + 2);
  const int w = out.window;
  const int max_length = opt.max_length > 0 ? opt.max_length : std::max(dim_m, 0);
  const int limit = e.cutoff() - 1;
  int horizon = std::min(limit, std::max(r, 0) + w);

  const auto gens = minimal_generators(i_ideal);
  const Ideal mi = Ideal::maximal(i_ideal.ring_ptr()) * i_ideal;
  SequenceState st(e, f);

  auto first_vanishing = [&](std::size_t i) -> std::optional<int> {
    for (int n = std::max(r, 0); n <= horizon; ++n)
      if (st.quotient_dim(i, n) == 0) return n;
    return std::nullopt;
  };

  std::size_t i = 0;
  std::optional<int> vanish;
  while (true) {
    e.prepare(horizon + 1);
    vanish = first_vanishing(i);
    if (vanish) break;
    if (static_cast<int>(i) >= max_length) {
      if (horizon >= limit)
        throw CutoffExceeded("quotient by the filter-regular sequence does not vanish by degree " +
                             std::to_string(limit));
      horizon = std::min(limit, horizon + w);
      continue;
    }
    bool accepted = false;
    for (int attempt = 0; attempt <= opt.max_retries && !accepted; ++attempt) {
      const auto coeffs = src.draw(gens.size());
      Polynomial z = i_ideal.ring().zero();
      for (std::size_t k = 0; k < gens.size(); ++k) z = z + gens[k].scaled(coeffs[k]);
      if (z.is_zero() || mi.contains(z)) {
        ++out.retries;
        continue;
      }
      st.push(z);
      while (true) {
        const EndDegree last = last_nonzero_kernel(st, i, horizon);
        if ((!last || *last <= horizon - w) && horizon >= r) {
          accepted = true;
          break;
        }
        if (horizon >= limit) break;
        horizon = std::min(limit, horizon + w);
        e.prepare(horizon + 1);
      }
      if (!accepted) {
        st.pop();
        ++out.retries;
      }
    }
    if (!accepted)
      throw GenericityFailure("no filter-regular element for position " + std::to_string(i + 1) + " after " +
                              std::to_string(opt.max_retries) + " retries");
    if (i == 0) out.first_retries = out.retries;
    ++i;
  }

  const std::size_t length = st.length();
  for (std::size_t k = 0; k < length; ++k) {
    const EndDegree last = last_nonzero_kernel(st, k, horizon);
    if (last && *last > horizon - w)
      throw GenericityFailure("kernel of sequence element " + std::to_string(k + 1) +
                              " does not settle within the scanned range");
    out.b.push_back(last);
  }
  EndDegree top;
  for (int n = *vanish - 1; n >= 0; --n)
    if (st.quotient_dim(length, n) != 0) {
      top = n;
      break;
    }
  out.b.push_back(top);
  out.sequence = st.elements();
  out.scanned_to = horizon;
  for (const auto& b : out.b) out.reg = max_end(out.reg, b);
  if (out.reg && *out.reg > opt.cap)
    throw CutoffExceeded("regularity end degree " + std::to_string(*out.reg) + " above cap " +
                         std::to_string(opt.cap));

  if (!out.reg) {
    out.dim = -1;
    return out;
  }
  if (length == 0) {
    out.a = {top};
    out.dim = 0;
    return out;
  }

  // Local duality over P: a_i = -l - indeg Ext_P^{l-i}(E, P).
  int relation_degree = *out.reg + 1;
  PresentedModule pe = present_over_sequence(st, e, f, *top, relation_degree);
  auto matches = [&](const PresentedModule& m) {
    for (int n = 0; n <= horizon; ++n)
      if (m.graded_dim(n) != e.dim(n)) return false;
    return true;
  };
  if (!matches(pe)) {
    pe = present_over_sequence(st, e, f, *top, horizon);
    if (!matches(pe)) throw GenericityFailure("presentation over the sequence ring has the wrong Hilbert function");
  }
  const int l = static_cast<int>(length);
  std::vector<EndDegree> a(length + 1);
  for (int k = 0; k <= l; ++k) {
    PresentedModule ext = ext_module(pe, l - k);
    if (!ext.is_zero()) a[static_cast<std::size_t>(k)] = -l - ext.initial_degree();
  }
  EndDegree running_a, running_b;
  for (std::size_t k = 0; k <= length; ++k) {
    running_a = max_end(running_a, shift_end(a[k], static_cast<int>(k)));
    running_b = max_end(running_b, out.b[k]);
    if (running_a != running_b)
      throw GenericityFailure("end degrees disagree at position " + std::to_string(k) + ": " + show(running_a) +
                              " vs " + show(running_b));
  }
  out.dim = 0;
  for (std::size_t k = 0; k <= length; ++k)
    if (a[k]) out.dim = static_cast<int>(k);
  a.resize(static_cast<std::size_t>(out.dim) + 1);
  out.a = std::move(a);
  for (std::size_t k = 1; k < out.a.size(); ++k) out.geom = max_end(out.geom, shift_end(out.a[k], static_cast<int>(k)));
  return out;
}

RegularityData regularity(const GradedPieceModule& e, std::uint64_t seed, const RegularityOptions& opt) {
  CoefficientSource src(e.source().primary().ring().field(), seed);
  return regularity(e, src, opt);
}

EndDegree a0(const GradedPieceModule& e, std::uint64_t seed, const RegularityOptions& opt) {
  const auto data = regularity(e, seed, opt);
  return data.a.empty() ? std::nullopt : data.a.front();
}

// ---------------------------------------------------------------------------
// Hilbert polynomials

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binom(std::int64_t top, std::int64_t k) {
  if (k < 0) return 0;
  cpp_int num = 1, den = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    num *= top - j;
    den *= j + 1;
  }
  return num / den;
}

}  // namespace

std::int64_t binomial_polynomial(const std::vector<std::int64_t>& e, std::int64_t t) {
  if (e.empty()) return 0;
  const auto deg = static_cast<std::int64_t>(e.size()) - 1;
  cpp_int acc = 0;
  for (std::int64_t i = 0; i <= deg; ++i) {
    cpp_int term = e[static_cast<std::size_t>(i)] * binom(t + deg - i, deg - i);
    acc += (i % 2 == 0) ? term : cpp_int(-term);
  }
  return acc.convert_to<std::int64_t>();
}

PolynomialFit fit_binomial_polynomial(const std::vector<std::int64_t>& h, int deg, int start) {
  if (deg < 0) return PolynomialFit{{}, 0, start};
  const auto n = static_cast<std::size_t>(deg) + 1;
  if (start < 0 || static_cast<std::size_t>(start) + n + 2 > h.size())
    throw InterpolationInconsistent("not enough values to fit and guard a degree " + std::to_string(deg) +
                                    " polynomial");
  std::vector<std::vector<cpp_rational>> a(n, std::vector<cpp_rational>(n + 1));
  for (std::size_t row = 0; row < n; ++row) {
    const std::int64_t t = start + static_cast<std::int64_t>(row);
    for (std::size_t i = 0; i < n; ++i) {
      cpp_rational v(binom(t + deg - static_cast<std::int64_t>(i), deg - static_cast<std::int64_t>(i)));
      a[row][i] = (i % 2 == 0) ? v : cpp_rational(-v);
    }
    a[row][n] = cpp_rational(h[static_cast<std::size_t>(t)]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InterpolationInconsistent("singular interpolation system");
    std::swap(a[piv], a[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const cpp_rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  PolynomialFit fit;
  fit.start = start;
  for (std::size_t i = 0; i < n; ++i) {
    const cpp_rational v = a[i][n] / a[i][i];
    if (denominator(v) != 1) throw InterpolationInconsistent("non-integral Hilbert coefficient");
    fit.e.push_back(numerator(v).convert_to<std::int64_t>());
  }
  for (std::int64_t t = start + deg + 1; t <= start + deg + 2; ++t)
    if (binomial_polynomial(fit.e, t) != h[static_cast<std::size_t>(t)])
      throw InterpolationInconsistent("polynomial disagrees with the Hilbert function at " + std::to_string(t));
  fit.postulation = 0;
  for (int t = start - 1; t >= 0; --t)
    if (binomial_polynomial(fit.e, t) != h[static_cast<std::size_t>(t)]) {
      fit.postulation = t + 1;
      break;
    }
  return fit;
}

HilbertData hilbert_coefficients(const GoodFiltration& f, const RegularityData& g) {
  HilbertData out;
  const int d = g.dim;
  if (d < 0) return out;
  const int start = g.reg ? std::max(0, *g.reg + 1) : 0;
  const int last = start + d + 2;
  for (int n = 0; n <= last; ++n) out.values.push_back(static_cast<std::int64_t>(f.hilbert_samuel(n)));
  const auto fit = fit_binomial_polynomial(out.values, d, start);
  out.e = fit.e;
  out.postulation = fit.postulation;
  return out;
}

HilbertData module_hilbert_coefficients(const GradedPieceModule& e, const RegularityData& g) {
  HilbertData out;
  if (g.dim < 1) return out;
  const int start = g.reg ? std::max(0, *g.reg + 1) : 0;
  const int last = start + g.dim + 1;
  e.prepare(last);
  for (int n = 0; n <= last; ++n) out.values.push_back(static_cast<std::int64_t>(e.dim(n)));
  const auto fit = fit_binomial_polynomial(out.values, g.dim - 1, start);
  out.e = fit.e;
  out.postulation = fit.postulation;
  return out;
}

}  // namespace filtreg
