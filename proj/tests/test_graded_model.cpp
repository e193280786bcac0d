#include <gtest/gtest.h>

#include "filtreg/errors.hpp"
#include "filtreg/graded_model.hpp"
#include "filtreg/regularity.hpp"

using namespace filtreg;

namespace {

RingPtr kx() { return make_ring(32003, {"x"}); }
RingPtr kxy() { return make_ring(32003, {"x", "y"}); }

Ideal ideal(const RingPtr& r, std::vector<std::string> g) { return Ideal(r, g); }

std::vector<std::size_t> dims(const GradedPieceModule& e, int upto) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= upto; ++n) out.push_back(e.dim(n));
  return out;
}

std::int64_t len(const Ideal& i) { return static_cast<std::int64_t>(i.colength()); }

std::vector<GoodFiltration> sample_filtrations() {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  const Ideal i = ideal(r, {"x^2", "y^2"});
  return {GoodFiltration::adic(Ideal::zero(r), m),
          GoodFiltration::adic(Ideal::zero(r), i),
          GoodFiltration::adic(ideal(r, {"x^2", "x*y"}), m),
          GoodFiltration::adic(ideal(r, {"x^3", "x*y"}), ideal(r, {"x^2", "y"})),
          scale_filtration(GoodFiltration::adic(Ideal::zero(r), i), m),
          GoodFiltration::validate(Ideal::zero(r), m.power(2), {Ideal::unit(r), m, m.power(2), m.power(4)})};
}

}  // namespace

TEST(AssocGraded, Examples) {
  auto r1 = kx();
  auto g1 = GradedPieceModule::assoc_graded(GoodFiltration::adic(Ideal::zero(r1), ideal(r1, {"x^2"})), 10);
  EXPECT_EQ(dims(g1, 4), (std::vector<std::size_t>{2, 2, 2, 2, 2}));

  auto r = kxy();
  auto g2 = GradedPieceModule::assoc_graded(GoodFiltration::adic(Ideal::zero(r), Ideal::maximal(r)), 10);
  EXPECT_EQ(dims(g2, 4), (std::vector<std::size_t>{1, 2, 3, 4, 5}));

  const Ideal m = Ideal::maximal(r);
  const Ideal i = ideal(r, {"x^2", "y^2"});
  auto mixed = GoodFiltration::validate(Ideal::zero(r), i, {Ideal::unit(r), m, m * i});
  EXPECT_EQ(GradedPieceModule::assoc_graded(mixed, 10).dim(0), 1u);
}

TEST(AssocGraded, CutoffIsEnforced) {
  auto r = kxy();
  auto g = GradedPieceModule::assoc_graded(GoodFiltration::adic(Ideal::zero(r), Ideal::maximal(r)), 3);
  EXPECT_NO_THROW(g.piece(3));
  EXPECT_THROW(g.piece(4), CutoffTooSmall);
}

TEST(AssocGraded, DimensionsAddUpToHilbertSamuel) {
  for (const auto& f : sample_filtrations()) {
    auto g = GradedPieceModule::assoc_graded(f, 12);
    g.prepare(8);
    std::size_t total = 0;
    for (int n = 0; n <= 8; ++n) {
      total += g.dim(n);
      EXPECT_EQ(total, f.hilbert_samuel(n)) << n;
    }
  }
}

TEST(AssocGraded, MultiplicationMapsCommute) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  auto g = GradedPieceModule::assoc_graded(GoodFiltration::adic(ideal(r, {"x^2", "x*y"}), m), 10);
  const auto& f = r->field();
  const Polynomial a = r->parse("x + 3*y");
  const Polynomial b = r->parse("2*x - y");
  for (int n = 0; n < 5; ++n) {
    auto ab = multiply(g.multiplication(b, n + 1), g.multiplication(a, n), f);
    auto ba = multiply(g.multiplication(a, n + 1), g.multiplication(b, n), f);
    EXPECT_EQ(ab, ba) << n;
  }
}

TEST(FiberCone, Examples) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  auto classical = GradedPieceModule::fiber_cone(GoodFiltration::adic(Ideal::zero(r), ideal(r, {"x^2", "y^2"})), m, 10);
  EXPECT_EQ(dims(classical, 4), (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  auto fm = GradedPieceModule::fiber_cone(GoodFiltration::adic(Ideal::zero(r), m), m, 10);
  EXPECT_EQ(dims(fm, 4), (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_THROW(GradedPieceModule::fiber_cone(GoodFiltration::adic(Ideal::zero(r), m), ideal(r, {"x"}), 10),
               QDoesNotContainI);
}

TEST(FiberCone, HypothesisIsChecked) {
  auto r = kxy();
  const Ideal i = ideal(r, {"x^2", "y^2"});
  auto mixed = GoodFiltration::validate(Ideal::zero(r), i, {Ideal::unit(r), Ideal::maximal(r)});
  try {
    GradedPieceModule::fiber_cone(mixed, i, 10);
    FAIL() << "expected HypothesisFails";
  } catch (const HypothesisFails& e) {
    EXPECT_EQ(e.index, 0);
  }
}

TEST(FiberCone, ExactSequenceDimensions) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  for (const auto& f : sample_filtrations()) {
    if (f.first_not_in_scaled(m)) continue;
    auto fib = GradedPieceModule::fiber_cone(f, m, 12);
    auto gq = GradedPieceModule::assoc_graded(scale_filtration(f, m), 12);
    for (int n = 0; n <= 6; ++n) {
      std::int64_t nprev = 0;
      if (n >= 1) nprev = len(f.level(n)) - len(m * f.level(n - 1) + f.base());
      EXPECT_EQ(static_cast<std::int64_t>(fib.dim(n)), static_cast<std::int64_t>(gq.dim(n)) - nprev) << n;
    }
  }
}

TEST(MinimalGenerators, DropsRedundantGenerators) {
  auto r = kxy();
  auto gens = minimal_generators(ideal(r, {"x^2", "y^2", "x^2*y", "x^2 + y^2"}));
  EXPECT_EQ(gens.size(), 2u);
  EXPECT_EQ(minimal_generators(Ideal::maximal(r)).size(), 2u);
}

TEST(SampleGeneric, BothCoefficientsNonzero) {
  auto r = kxy();
  const Ideal i = ideal(r, {"x^2", "y^2"});
  auto g = GradedPieceModule::ambient(i, 20);
  CoefficientSource src(r->field(), 11);
  auto x = sample_generic(i, {&g}, src, 11, 5, 4, 18);
  EXPECT_EQ(x.retries, 0);
  EXPECT_EQ(x.element.terms().size(), 2u);
  EXPECT_TRUE(i.contains(x.element));
  EXPECT_FALSE((Ideal::maximal(r) * i).contains(x.element));
}

TEST(SampleGeneric, PrincipalIdeal) {
  auto r = kx();
  const Ideal i = ideal(r, {"x"});
  auto g = GradedPieceModule::ambient(i, 20);
  CoefficientSource src(r->field(), 3);
  auto x = sample_generic(i, {&g}, src, 3, 5, 4, 18);
  ASSERT_EQ(x.element.terms().size(), 1u);
  EXPECT_EQ(x.element.terms()[0].m, r->var(0).terms()[0].m);
}

TEST(SampleGeneric, DegenerateFirstSampleIsRetried) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  auto g = GradedPieceModule::assoc_graded(GoodFiltration::adic(ideal(r, {"x^2", "x*y"}), m), 20);
  CoefficientSource src(r->field(), 5);
  src.set_script({{1, 0}});
  auto x = sample_generic(m, {&g}, src, 5, 5, 4, 18);
  EXPECT_EQ(x.retries, 1);

  CoefficientSource stuck(r->field(), 5);
  stuck.set_script({{1, 0}, {1, 0}, {1, 0}});
  EXPECT_THROW(sample_generic(m, {&g}, stuck, 5, 2, 4, 18), GenericityFailure);
}

TEST(FilterRegular, Examples) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  auto poly = GradedPieceModule::assoc_graded(GoodFiltration::adic(Ideal::zero(r), m), 20);
  auto w = is_filter_regular(r->parse("x"), poly, 4, 18);
  EXPECT_TRUE(w.regular);
  EXPECT_EQ(w.witness, std::nullopt);

  auto emb = GradedPieceModule::assoc_graded(GoodFiltration::adic(ideal(r, {"x^2", "x*y"}), m), 20);
  auto v = is_filter_regular(r->parse("x + 5*y"), emb, 4, 18);
  EXPECT_TRUE(v.regular);
  EXPECT_EQ(v.witness, 1);
  EXPECT_FALSE(is_filter_regular(r->parse("x"), emb, 4, 18).regular);

  auto zero = GradedPieceModule::assoc_graded(GoodFiltration::adic(Ideal::unit(r), m), 20);
  auto z = is_filter_regular(r->parse("x"), zero, 4, 18);
  EXPECT_TRUE(z.regular);
  EXPECT_EQ(z.witness, std::nullopt);
}

TEST(Singh, Examples) {
  auto r2 = kxy();
  auto f2 = GoodFiltration::adic(Ideal::zero(r2), Ideal::maximal(r2));
  auto s2 = singh_identity(f2, r2->parse("3*x + 7*y"), 2);
  EXPECT_EQ(s2.lhs, 3);
  EXPECT_EQ(s2.rhs, 3);

  auto r1 = kx();
  auto f1 = GoodFiltration::adic(Ideal::zero(r1), ideal(r1, {"x^2"}));
  auto s1 = singh_identity(f1, r1->parse("x^2"), 0);
  EXPECT_EQ(s1.lhs, 2);
  EXPECT_EQ(s1.rhs, 2);
}

TEST(Singh, HoldsInEveryDegree) {
  for (const auto& f : sample_filtrations()) {
    auto g = GradedPieceModule::assoc_graded(f, 20);
    CoefficientSource src(f.ring_ptr()->field(), 9);
    auto x = sample_generic(f.primary(), {&g}, src, 9, 5, 4, 18);
    for (int n = 0; n <= 6; ++n) EXPECT_TRUE(singh_identity(f, x.element, n).holds()) << n;
  }
}

TEST(FilterRegular, ColonConsequencesBeyondRegularity) {
  for (const auto& f : sample_filtrations()) {
    auto g = GradedPieceModule::assoc_graded(f, 24);
    auto data = regularity(g, 13);
    ASSERT_TRUE(data.reg.has_value());
    CoefficientSource src(f.ring_ptr()->field(), 21);
    auto x = sample_generic(f.primary(), {&g}, src, 21, 5, 4, 20).element;
    const Ideal& j = f.base();
    const Ideal xa(f.ring_ptr(), std::vector<Polynomial>{x});
    const Ideal j_colon_x = j.colon(x);
    EXPECT_TRUE(j.saturation(Ideal::maximal(f.ring_ptr())).contains(j_colon_x));
    for (int n = *data.reg + 1; n <= *data.reg + 4; ++n) {
      EXPECT_EQ((xa + j).intersect(f.level(n)), f.level(n - 1).times(x) + j) << n;
      EXPECT_EQ(f.level(n + 1).colon(x), f.level(n) + j_colon_x) << n;
    }
  }
}
