#include "filtreg/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "filtreg/degrees.hpp"
#include "filtreg/errors.hpp"
#include "filtreg/graded_model.hpp"

namespace filtreg {

namespace {

constexpr std::uint64_t kReductionSalt = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kElementSalt = 0xbf58476d1ce4e5b9ULL;
constexpr std::uint64_t kFiberSalt = 0x94d049bb133111ebULL;
constexpr std::uint64_t kBarSalt = 0x2545f4914f6cdd1dULL;
constexpr std::uint64_t kAmbientSalt = 0x853c49e6748fea9bULL;

const std::vector<std::string> kFiberFamily = {"F1", "F2", "F3", "F4", "FiberGraded", "FiberSeq-dims"};

class Runner {
 public:
  Runner(const ExperimentConfig& cfg, InvariantReport& rep) : cfg_(cfg), rep_(rep), inv_(rep.inv) {}

  void run() {
    stage("setup", [&] { setup(); });
    stage("module", [&] { module(); });
    stage("degrees", [&] { degrees(); });
    stage("regularity", [&] { regularity_of_g(); });
    stage("hilbert", [&] { hilbert(); });
    stage("quotient", [&] { quotient_by_h0(); });
    stage("ambient", [&] { ambient(); });
    stage("fiber", [&] { fiber(); });
    stage("element", [&] { element(); });
    stage("checks", [&] { checks(); });
  }

  const std::string& current_stage() const { return stage_; }

 private:
  template <class F>
  void stage(const char* name, F&& fn) {
    stage_ = name;
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    rep_.timings.emplace_back(name, dt.count());
  }

  // ---- computation -------------------------------------------------------

  void setup() {
    ring_ = make_ring(cfg_.characteristic, cfg_.variables);
    j_ = Ideal(ring_, cfg_.j);
    i_ = Ideal(ring_, cfg_.i);
    m_ = Ideal::maximal(ring_);
    if (cfg_.is_adic()) {
      f_ = GoodFiltration::adic(j_, i_);
    } else {
      std::vector<Ideal> chain;
      for (const auto& level : cfg_.chain) chain.emplace_back(ring_, level);
      f_ = GoodFiltration::validate(j_, i_, chain);
    }
    if (cfg_.q) q_ = Ideal(ring_, *cfg_.q);
    inv_.r = f_->reduction_index();
    i_homogeneous_ = i_.is_homogeneous();
    filtration_homogeneous_ = i_homogeneous_;
    for (int k = 0; k <= f_->tail_index(); ++k) filtration_homogeneous_ = filtration_homogeneous_ && f_->level(k).is_homogeneous();
  }

  void module() {
    spec_ = module_spec(j_);
    d_ = spec_->d;
    inv_.d = d_;
    inv_.depth_positive = spec_->depth_positive;
    inv_.h0_length = static_cast<std::int64_t>(spec_->h0_length);
    window_ = std::max(4, d_ + 2);
    cutoff_ = cfg_.cutoff_cap + window_ + 4;
  }

  void degrees() {
    const PresentedModule mod = PresentedModule::cyclic(j_);
    const int n = static_cast<int>(ring_->nvars());
    inv_.e_im = multiplicity(i_, mod).e;
    inv_.hdeg_im = hdeg(i_, mod).value;
    inv_.hdeg_m = hdeg(m_, mod).value;
    if (!spec_->depth_positive && !spec_->saturation.is_unit())
      inv_.hdeg_im_bar = hdeg(i_, PresentedModule::cyclic(spec_->saturation)).value;
    else if (spec_->depth_positive)
      inv_.hdeg_im_bar = inv_.hdeg_im;
    else
      inv_.hdeg_im_bar = 0;
    inv_.reg_m = reg_module(mod);
    bool cm = true;
    for (int k = 0; k <= n && cm; ++k)
      if (k != n - d_ && !ext_module(mod, k).is_zero()) cm = false;
    inv_.cohen_macaulay = cm;

    std::optional<MinimalReduction> red;
    if (d_ >= 1) {
      CoefficientSource src(ring_->field(), cfg_.seed ^ kReductionSalt);
      red = minimal_reduction(i_, j_, d_, src, cfg_.retries);
      for (const auto& g : red->q.generators()) inv_.reduction.push_back(ring_->to_string(g));
    }
    const ScalarInvariants s = scalar_invariants(i_, *spec_, red);
    inv_.l_ai = static_cast<std::int64_t>(s.l_ai);
    if (red) inv_.l_mqm = static_cast<std::int64_t>(s.l_mqm);
    inv_.i_m = s.i_m;
    inv_.mu_m = s.mu_m;
    inv_.delta = s.delta;
  }

  int capped(const std::function<BigInt()>& bound) const {
    if (d_ < 1) return cfg_.cutoff_cap;
    try {
      const BigInt b = bound();
      if (b < cfg_.cutoff_cap) return std::max(0, b.convert_to<int>());
    } catch (const BoundTooLarge&) {
    }
    return cfg_.cutoff_cap;
  }

  RegularityOptions options(int cap) const {
    RegularityOptions o;
    o.cap = cap;
    o.max_retries = cfg_.retries;
    return o;
  }

  void regularity_of_g() {
    g_model_ = GradedPieceModule::assoc_graded(*f_, cutoff_);
    CoefficientSource src(ring_->field(), cfg_.seed);
    if (!cfg_.first_sample.empty()) {
      std::vector<Coeff> script;
      for (auto c : cfg_.first_sample) script.push_back(ring_->field().from_int(c));
      src.set_script({script});
    }
    const int cap = capped([&] { return bound_assoc_graded(d_, *inv_.hdeg_im, *inv_.r); });
    inv_.g = regularity(*g_model_, src, options(cap));
  }

  void hilbert() {
    if (d_ >= 1 && inv_.g->reg) inv_.hilbert = hilbert_coefficients(*f_, *inv_.g);
  }

  void quotient_by_h0() {
    if (spec_->depth_positive) {
      inv_.g_bar = inv_.g;
      return;
    }
    if (spec_->saturation.is_unit()) return;
    const GoodFiltration bar = quotient_filtration(*f_, spec_->saturation);
    const auto model = GradedPieceModule::assoc_graded(bar, cutoff_);
    CoefficientSource src(ring_->field(), cfg_.seed ^ kBarSalt);
    inv_.g_bar = regularity(model, src, options(cfg_.cutoff_cap));
  }

  void ambient() {
    if (!i_homogeneous_ || !wanted("B4")) return;
    const int n = static_cast<int>(ring_->nvars());
    const auto model = GradedPieceModule::ambient(i_, cfg_.cutoff_cap + std::max(4, n + 2) + 4);
    CoefficientSource src(ring_->field(), cfg_.seed ^ kAmbientSalt);
    int cap = cfg_.cutoff_cap;
    try {
      const BigInt b = bound_corollary(n, *inv_.l_ai);
      if (b < cap) cap = b.convert_to<int>();
    } catch (const BoundTooLarge&) {
    }
    inv_.ambient = regularity(model, src, options(cap));
  }

  void fiber() {
    const Ideal q = q_ && q_->contains(i_) ? *q_ : m_;
    inv_.r_scaled = scale_filtration(*f_, q).reduction_index();
    if (!q_) {
      fiber_skip_ = "no q configured";
      return;
    }
    if (!q_->contains(i_)) {
      fiber_skip_ = "QDoesNotContainI";
      return;
    }
    if (auto n = f_->first_not_in_scaled(*q_)) {
      fiber_skip_ = "HypothesisFails at n = " + std::to_string(*n);
      return;
    }
    fiber_model_ = GradedPieceModule::fiber_cone(*f_, *q_, cutoff_);
    CoefficientSource src(ring_->field(), cfg_.seed ^ kFiberSalt);
    const int cap = capped([&] { return bound_fiber(d_, *inv_.hdeg_im, *inv_.r, FiberMode::Reg); });
    inv_.fiber = regularity(*fiber_model_, src, options(cap));
    if (d_ >= 1) {
      const int start = inv_.fiber->reg ? std::max(0, *inv_.fiber->reg + 1) : 0;
      const int last = start + (d_ - 1) + 2;
      fiber_model_->prepare(last);
      std::vector<std::int64_t> h;
      for (int n = 0; n <= last; ++n) h.push_back(static_cast<std::int64_t>(fiber_model_->dim(n)));
      inv_.fiber_e = fit_binomial_polynomial(h, d_ - 1, start).e;
    }
  }

  void element() {
    std::vector<const GradedPieceModule*> targets{&*g_model_};
    if (fiber_model_) targets.push_back(&*fiber_model_);
    CoefficientSource src(ring_->field(), cfg_.seed ^ kElementSalt);
    x_ = sample_generic(i_, targets, src, cfg_.seed, cfg_.retries, window_, cutoff_ - 2).element;
  }

  // ---- checks ------------------------------------------------------------

  bool wanted(const std::string& family) const {
    if (cfg_.checks.empty()) return true;
    for (const auto& id : check_registry())
      if ((id == family || id.rfind(family + ".", 0) == 0) && check_selected(cfg_, id)) return true;
    return false;
  }

  void push(CheckResult c) {
    if (check_selected(cfg_, c.id)) rep_.checks.push_back(std::move(c));
  }

  void skip(const std::string& id, const std::string& reason, std::optional<int> index = std::nullopt) {
    CheckResult c;
    c.id = id;
    c.index = index;
    c.status = CheckStatus::Skipped;
    c.detail = reason;
    push(std::move(c));
  }

  void ineq(const std::string& id, const BigInt& computed, const std::function<BigInt()>& bound,
            const std::string& detail = "", std::optional<int> index = std::nullopt) {
    CheckResult c;
    c.id = id;
    c.index = index;
    c.computed = computed;
    c.detail = detail;
    try {
      c.bound = bound();
      c.status = computed <= *c.bound ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const BoundTooLarge& e) {
      c.status = CheckStatus::Skipped;
      c.detail = std::string("BoundTooLarge: ") + e.what();
    }
    push(std::move(c));
  }

  /// Identity checks: computed = number of violations, bound = 0.
  void identity(const std::string& id, std::int64_t violations, const std::string& detail) {
    ineq(id, violations, [] { return BigInt(0); }, detail);
  }

  /// Emits family.i/ii(/iii), evaluating the case matching d and skipping the rest.
  void by_dimension(const std::string& family, int cases, const std::function<void(const std::string&)>& eval,
                    const std::string& unavailable = "") {
    static const char* names[] = {"i", "ii", "iii"};
    int active = -1;
    if (d_ >= 1) active = cases == 2 ? (d_ == 1 ? 0 : 1) : std::min(d_, 3) - 1;
    for (int k = 0; k < cases; ++k) {
      const std::string id = family + "." + names[k];
      if (!unavailable.empty()) {
        skip(id, unavailable);
      } else if (d_ < 1) {
        skip(id, "requires dim M >= 1");
      } else if (k != active) {
        const char* range = cases == 2 ? (k == 0 ? "d = 1" : "d >= 2") : (k == 0 ? "d = 1" : k == 1 ? "d = 2" : "d >= 3");
        skip(id, std::string("applies to ") + range);
      } else {
        eval(id);
      }
    }
  }

  static std::string show(const EndDegree& e) { return e ? std::to_string(*e) : "-inf"; }

  void checks() {
    const RegularityData& g = *inv_.g;
    const int r = *inv_.r;
    const std::int64_t dval = *inv_.hdeg_im;
    const BigInt reg = g.reg ? BigInt(*g.reg) : BigInt(-1);
    const std::string no_reg = g.reg ? "" : "G(F) is zero";

    // Reduction index against regularity.
    if (g.reg) {
      ineq("Lemma-r<=reg", r, [&] { return reg; }, "r(F) <= reg G(F)", 0);
    } else {
      skip("Lemma-r<=reg", no_reg, 0);
    }
    ineq("Lemma-r<=reg", *inv_.r_scaled, [&] { return BigInt(r + 1); },
         q_ && q_->contains(i_) ? "r(qF) <= r(F) + 1" : "r(mF) <= r(F) + 1", 1);

    by_dimension("A3", 2, [&](const std::string& id) {
      ineq(id, reg, [&] { return bound_assoc_graded(d_, dval, r); }, "D = hdeg(I,M) = " + std::to_string(dval));
    }, no_reg);

    hilbert_checks(g, dval, r);
    a5_checks(g, dval);
    structural_checks(g, r);
    graded_checks(g, r);
    fiber_checks(dval, r);
  }

  void hilbert_checks(const RegularityData& g, std::int64_t dval, int r) {
    if (!inv_.hilbert) {
      const std::string why = d_ < 1 ? "requires dim M >= 1" : "G(F) is zero";
      for (const char* id : {"Hilb.0", "Hilb.1", "Hilb.i", "GS-agreement"}) skip(id, why);
      return;
    }
    const auto& e = inv_.hilbert->e;
    {
      CheckResult c;
      c.id = "Hilb.0";
      c.computed = e[0];
      c.bound = dval;
      c.detail = "e(I,M) = " + std::to_string(*inv_.e_im);
      c.status = (e[0] == *inv_.e_im && e[0] <= dval) ? CheckStatus::Pass : CheckStatus::Fail;
      push(std::move(c));
    }
    ineq("Hilb.1", BigInt(std::abs(e[1])), [&] { return bound_hilbert_coeff(1, d_, dval, r); }, "|e_1|");
    if (d_ < 2) {
      skip("Hilb.i", "requires d >= 2");
    } else {
      for (int i = 2; i <= d_; ++i)
        ineq("Hilb.i", BigInt(std::abs(e[static_cast<std::size_t>(i)])), [&] { return bound_hilbert_coeff(i, d_, dval, r); },
             "|e_" + std::to_string(i) + "|", i);
    }
    std::int64_t bad = 0;
    const auto& h = inv_.hilbert->values;
    for (int n = *g.reg + 1; n <= *g.reg + d_ + 3 && n < static_cast<int>(h.size()); ++n)
      bad += h[static_cast<std::size_t>(n)] != binomial_polynomial(e, n);
    identity("GS-agreement", bad, "H(n) = P(n) for reg < n <= reg + d + 3");
  }

  void a5_checks(const RegularityData& g, std::int64_t dval) {
    if (d_ < 1 || !g.reg || !inv_.l_mqm) {
      skip("A5.i", "requires dim M >= 1");
      skip("A5.ii", "requires dim M >= 1");
      return;
    }
    struct Worst {
      int n = 0;
      BigInt computed, bound, gap;
      bool set = false;
    } wi, wii;
    Ideal power = i_;
    for (int n = 0; n <= *g.reg + 3; ++n) {
      if (n > 0) power = power * i_;
      const BigInt len = static_cast<std::int64_t>((power + j_).colength());
      const BigInt bi = bound_hs_binomial(n, d_, *inv_.l_mqm);
      const BigInt bii = bound_hs_binomial(n, d_, dval);
      if (!wi.set || len - bi > wi.gap) wi = {n, len, bi, len - bi, true};
      if (!wii.set || len - bii > wii.gap) wii = {n, len, bii, len - bii, true};
    }
    ineq("A5.i", wi.computed, [&] { return wi.bound; }, "worst n over 0..reg+3", wi.n);
    ineq("A5.ii", wii.computed, [&] { return wii.bound; }, "worst n over 0..reg+3", wii.n);
  }

  void structural_checks(const RegularityData& g, int r) {
    const int top = g.reg ? *g.reg : std::max(r, 0);
    std::int64_t singh_bad = 0;
    for (int n = 0; n <= top + window_; ++n) singh_bad += !singh_identity(*f_, x_, n).holds();
    identity("Singh", singh_bad, "0 <= n <= reg + W");

    const Ideal xa(ring_, std::vector<Polynomial>{x_});
    const Ideal j_colon_x = j_.colon(x_);
    std::int64_t colon_bad = 0;
    for (int n = top + 1; n <= top + window_; ++n) {
      const Ideal wn = f_->level(n);
      const Ideal wn1 = f_->level(n + 1);
      colon_bad += !((xa + j_).intersect(wn) == f_->level(n - 1).times(x_) + j_);
      colon_bad += !(wn1.colon(x_) == wn + j_colon_x);
      colon_bad += !j_.contains(j_colon_x.intersect(wn1));
    }
    identity("FilterReg-colon", colon_bad, "reg < n <= reg + W");

    if (x_.is_homogeneous())
      identity("C2-implication", spec_->saturation.contains(j_colon_x) ? 0 : 1, "(J : x) inside J : m^inf");
    else
      skip("C2-implication", "generic element is not homogeneous");

    const RegularityData* bar = inv_.g_bar ? &*inv_.g_bar : nullptr;
    const int bar_reg = bar && bar->reg ? *bar->reg : std::numeric_limits<int>::min();
    if (g.reg) {
      ineq("A7-ineq", *g.reg, [&] { return BigInt(std::max(bar_reg, r)) + *inv_.h0_length; },
           "max(reg G(F/H0), r) + l(H0)");
    } else {
      skip("A7-ineq", "G(F) is zero");
    }
    if (!inv_.delta || !filtration_homogeneous_) {
      skip("C1-ineq", "requires a graded filtration and equigenerated I");
    } else if (!g.reg || !inv_.reg_m) {
      skip("C1-ineq", "G(F) is zero");
    } else {
      ineq("C1-ineq", *g.reg, [&] { return BigInt(std::max(bar_reg, *inv_.reg_m - *inv_.i_m + r)); },
           "max(reg G(F/H0), reg M - i(M) + r)");
    }
    if (i_homogeneous_) {
      ineq("B1-ineq", *inv_.hdeg_im, [&] { return big_pow(*inv_.l_ai, static_cast<std::uint64_t>(std::max(d_, 0))) * *inv_.hdeg_m; },
           "l(A/I)^d hdeg(m,M)");
    } else {
      skip("B1-ineq", "requires homogeneous I");
    }
  }

  void graded_checks(const RegularityData& g, int r) {
    const BigInt reg = g.reg ? BigInt(*g.reg) : BigInt(-1);
    const std::string graded = filtration_homogeneous_ ? (g.reg ? "" : "G(F) is zero") : "requires a graded filtration";
    by_dimension("B3", 2, [&](const std::string& id) {
      ineq(id, reg, [&] { return bound_graded_hdeg(d_, *inv_.l_ai, *inv_.hdeg_m, r); }, "hdeg(M) = " + std::to_string(*inv_.hdeg_m));
    }, graded);

    const int n = static_cast<int>(ring_->nvars());
    {
      static const char* names[] = {"B4.i", "B4.ii"};
      for (int k = 0; k < 2; ++k) {
        const bool active = (n == 1) == (k == 0);
        if (!i_homogeneous_) {
          skip(names[k], "requires homogeneous I");
        } else if (!active) {
          skip(names[k], k == 0 ? "applies to dim A = 1" : "applies to dim A >= 2");
        } else if (!inv_.ambient || !inv_.ambient->reg) {
          skip(names[k], "G_I(A) regularity unavailable");
        } else {
          ineq(names[k], *inv_.ambient->reg, [&] { return bound_corollary(n, *inv_.l_ai); },
               "G_I(A), l(A/I) = " + std::to_string(*inv_.l_ai));
        }
      }
    }

    by_dimension("B5", 2, [&](const std::string& id) {
      if (!inv_.reg_m) return skip(id, "reg(M) undefined");
      ineq(id, reg, [&] { return bound_graded_regM(d_, *inv_.l_ai, *inv_.mu_m, *inv_.reg_m, *inv_.i_m, n, r); },
           "reg(M) = " + std::to_string(*inv_.reg_m));
    }, graded);

    const std::string equi = !inv_.delta ? "I is not equigenerated" : graded;
    by_dimension("C3", 2, [&](const std::string& id) {
      ineq(id, reg, [&] { return bound_equigenerated(d_, *inv_.l_mqm, r, *inv_.reg_m, *inv_.i_m, *inv_.delta); },
           "l(M/QM) = " + std::to_string(*inv_.l_mqm) + ", delta = " + std::to_string(*inv_.delta));
    }, equi);
  }

  void fiber_checks(std::int64_t dval, int r) {
    std::string why = fiber_skip_;
    if (why.empty() && (!inv_.fiber || !inv_.fiber->reg)) why = "fiber cone is zero";
    if (!why.empty()) {
      skip("F1.a0", why);
      skip("F2.e0", why);
      skip("F2.ei", why);
      by_dimension("F3", 3, {}, why);
      by_dimension("F4", 3, {}, why);
      by_dimension("FiberGraded", 3, {}, why);
      skip("FiberSeq-dims", why);
      return;
    }
    const RegularityData& fd = *inv_.fiber;
    const BigInt freg = *fd.reg;
    if (d_ < 1) {
      skip("F1.a0", "requires dim M >= 1");
      skip("F2.e0", "requires dim M >= 1");
      skip("F2.ei", "requires dim M >= 1");
    } else {
      const EndDegree a0 = fd.a.empty() ? EndDegree{} : fd.a[0];
      CheckResult c;
      c.id = "F1.a0";
      c.bound = bound_fiber(d_, dval, r, FiberMode::A0);
      c.detail = "a_0(F_q(F)) = " + show(a0);
      if (a0) c.computed = *a0;
      c.status = !a0 || BigInt(*a0) <= *c.bound ? CheckStatus::Pass : CheckStatus::Fail;
      push(std::move(c));

      ineq("F2.e0", inv_.fiber_e[0], [&] { return bound_fiber(d_, dval, r, FiberMode::E0); }, "e_0(F_q(F))");
      if (d_ < 2) {
        skip("F2.ei", "requires d >= 2");
      } else {
        for (int i = 1; i <= d_ - 1; ++i)
          ineq("F2.ei", BigInt(std::abs(inv_.fiber_e[static_cast<std::size_t>(i)])),
               [&] { return bound_fiber(d_, dval, r, FiberMode::Ei, i); }, "|e_" + std::to_string(i) + "(F_q(F))|", i);
      }
    }

    by_dimension("F3", 3, [&](const std::string& id) {
      ineq(id, freg, [&] { return bound_fiber(d_, dval, r, FiberMode::Reg); }, "reg F_q(F)");
    });

    const bool classical = cfg_.is_adic() && j_.is_zero() && *q_ == m_;
    by_dimension("F4", 3, [&](const std::string& id) {
      ineq(id, freg, [&] { return bound_fiber_classical(d_, dval); }, "F_m(I), D(I,A) = " + std::to_string(dval));
    }, classical ? "" : "requires J = 0, the I-adic filtration and q = m");

    const bool graded = filtration_homogeneous_ && q_->is_homogeneous();
    by_dimension("FiberGraded", 3, [&](const std::string& id) {
      ineq(id, freg, [&] { return bound_fiber_graded(d_, *inv_.l_ai, dval, r); }, "hdeg(I,M) = " + std::to_string(dval));
    }, graded ? "" : "requires graded I, q and filtration");

    const GoodFiltration scaled = scale_filtration(*f_, *q_);
    const auto gq = GradedPieceModule::assoc_graded(scaled, cutoff_);
    std::int64_t bad = 0;
    for (int n = 0; n <= *fd.reg + 3; ++n) {
      std::int64_t nprev = 0;
      if (n >= 1)
        nprev = static_cast<std::int64_t>(f_->level(n).colength()) -
                static_cast<std::int64_t>((*q_ * f_->level(n - 1) + j_).colength());
      bad += static_cast<std::int64_t>(fiber_model_->dim(n)) != static_cast<std::int64_t>(gq.dim(n)) - nprev;
    }
    identity("FiberSeq-dims", bad, "dim F_n = dim G(qF)_n - dim N_{n-1} for n <= reg + 3");
  }

  const ExperimentConfig& cfg_;
  InvariantReport& rep_;
  Invariants& inv_;
  std::string stage_;

  RingPtr ring_;
  Ideal j_, i_, m_;
  std::optional<Ideal> q_;
  std::optional<GoodFiltration> f_;
  std::optional<ModuleSpec> spec_;
  int d_ = 0;
  int window_ = 4;
  int cutoff_ = 0;
  bool i_homogeneous_ = false;
  bool filtration_homogeneous_ = false;
  std::optional<GradedPieceModule> g_model_;
  std::optional<GradedPieceModule> fiber_model_;
  std::string fiber_skip_;
  Polynomial x_;
};

ExperimentConfig entry(std::string name, std::vector<std::string> tags, std::vector<std::string> vars,
                       GeneratorList j, GeneratorList i, std::vector<GeneratorList> chain = {},
                       std::optional<GeneratorList> q = std::nullopt) {
  ExperimentConfig c;
  c.name = std::move(name);
  c.tags = std::move(tags);
  c.variables = std::move(vars);
  c.j = std::move(j);
  c.i = std::move(i);
  c.chain = std::move(chain);
  c.q = std::move(q);
  return c;
}

}  // namespace

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> ids = {
      "Lemma-r<=reg", "A3.i",   "A3.ii",  "Hilb.0", "Hilb.1",  "Hilb.i",          "GS-agreement",
      "A5.i",         "A5.ii",  "Singh",  "FilterReg-colon",   "C2-implication",  "A7-ineq",
      "C1-ineq",      "B1-ineq", "B3.i",  "B3.ii",  "B4.i",    "B4.ii",           "B5.i",
      "B5.ii",        "C3.i",   "C3.ii",  "F1.a0",  "F2.e0",   "F2.ei",           "F3.i",
      "F3.ii",        "F3.iii", "F4.i",   "F4.ii",  "F4.iii",  "FiberGraded.i",   "FiberGraded.ii",
      "FiberGraded.iii", "FiberSeq-dims"};
  return ids;
}

InvariantReport run_experiment(const ExperimentConfig& cfg) {
  InvariantReport rep;
  rep.config = cfg;
  Runner runner(cfg, rep);
  try {
    runner.run();
  } catch (const Error& e) {
    rep.error = RunError{runner.current_stage(), e.kind(), e.what(), e.is_configuration_error()};
  } catch (const std::exception& e) {
    rep.error = RunError{runner.current_stage(), "InternalError", e.what(), false};
  }
  return rep;
}

std::vector<ExperimentConfig> builtin_corpus() {
  const std::vector<std::string> xy = {"x", "y"};
  const std::vector<std::string> xyz = {"x", "y", "z"};
  const GeneratorList m2 = {"x", "y"};
  const GeneratorList m3 = {"x", "y", "z"};
  return {
      entry("poly2-m-adic", {"oracle", "d2", "adic", "cm", "fiber", "classical"}, xy, {}, m2, {}, m2),
      entry("embedded-point", {"oracle", "d1", "depth0", "adic", "tight", "fiber"}, xy, {"x^2", "x*y"}, m2, {}, m2),
      entry("ci-x2-y2", {"oracle", "d0", "adic"}, xy, {"x^2", "y^2"}, m2),
      entry("fat-point", {"oracle", "d0", "adic"}, xy, {"x^2", "x*y", "y^2"}, m2),
      entry("koszul3", {"oracle", "d0", "adic"}, xyz, m3, m3),
      entry("classical-fiber-x2y2", {"d2", "adic", "equigenerated", "fiber", "classical"}, xy, {}, {"x^2", "y^2"}, {},
            m2),
      entry("scaled-x2y2", {"d2", "nonadic", "equigenerated", "fiber"}, xy, {}, {"x^2", "y^2"},
            {{"1"}, {"x", "y"}, {"x^3", "x*y^2", "x^2*y", "y^3"}}, m2),
      entry("mixed-x2y3", {"d2", "adic", "mixed", "fiber", "classical"}, xy, {}, {"x^2", "y^3"}, {}, m2),
      entry("m2-adic", {"d2", "adic", "equigenerated", "fiber", "classical"}, xy, {}, {"x^2", "x*y", "y^2"}, {}, m2),
      entry("x2-xy-y2-over-m", {"d2", "adic", "equigenerated", "fiber"}, xy, {}, {"x^2", "x*y", "y^2"}, {}, m2),
      entry("poly3-m-adic", {"d3", "adic", "cm", "fiber", "classical"}, xyz, {}, m3, {}, m3),
      entry("classical-fiber-x2y2z2", {"d3", "adic", "equigenerated", "fiber", "classical"}, xyz, {},
            {"x^2", "y^2", "z^2"}, {}, m3),
      entry("line-and-plane", {"d2", "adic", "noncm", "fiber"}, xyz, {"x*z", "y*z"}, m3, {}, m3),
      entry("plane-with-point", {"d2", "depth0", "adic", "fiber"}, xyz, {"x^2", "x*y", "x*z"}, m3, {}, m3),
      entry("axes-d1", {"d1", "adic", "cm", "fiber"}, xyz, {"x*y", "y*z", "x*z"}, m3, {}, m3),
      entry("embedded-point-nonadic", {"d1", "depth0", "nonadic", "mixed", "fiber"}, xy, {"x^2", "x*y"},
            {"x^2", "y^2"}, {{"1"}, {"x", "y"}, {"x^2", "x*y", "y^2"}}, m2),
      entry("nonhomogeneous-I", {"d2", "adic", "nonhomogeneous"}, xy, {}, {"x + y^2", "y^3"}, {}, m2),
  };
}

std::vector<InvariantReport> run_corpus(const std::vector<ExperimentConfig>& entries, const std::string& tag, int jobs) {
  std::vector<ExperimentConfig> selected;
  for (auto c : entries) {
    if (!tag.empty() && std::find(c.tags.begin(), c.tags.end(), tag) == c.tags.end()) continue;
    if (tag == "fiber" && c.checks.empty()) c.checks = kFiberFamily;
    selected.push_back(std::move(c));
  }
  std::vector<InvariantReport> out(selected.size());
  const auto count = static_cast<std::ptrdiff_t>(selected.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (std::ptrdiff_t k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = run_experiment(selected[static_cast<std::size_t>(k)]);
  return out;
}

int exit_code(const std::vector<InvariantReport>& reports) {
  bool config = false, computation = false, fail = false;
  for (const auto& r : reports) {
    if (r.error) (r.error->configuration ? config : computation) = true;
    fail = fail || r.count(CheckStatus::Fail) > 0;
  }
  if (config) return 2;
  if (computation) return 3;
  return fail ? 1 : 0;
}

}  // namespace filtreg
