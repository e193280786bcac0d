#include <gtest/gtest.h>

#include "filtreg/errors.hpp"
#include "filtreg/filtration.hpp"

using namespace filtreg;

namespace {

RingPtr kx() { return make_ring(32003, {"x"}); }
RingPtr kxy() { return make_ring(32003, {"x", "y"}); }

Ideal ideal(const RingPtr& r, std::vector<std::string> g) { return Ideal(r, g); }

/// A > m > mI > mI^2 for I = (x^2, y^2).
GoodFiltration m_times_adic(const RingPtr& r) {
  const Ideal m = Ideal::maximal(r);
  const Ideal i = ideal(r, {"x^2", "y^2"});
  return GoodFiltration::validate(Ideal::zero(r), i, {Ideal::unit(r), m, m * i, m * i.power(2)});
}

}  // namespace

TEST(Validate, AdicChain) {
  auto r = kxy();
  const Ideal i = ideal(r, {"x^2", "y^2"});
  auto f = GoodFiltration::validate(Ideal::zero(r), i, {Ideal::unit(r), i, i.power(2), i.power(3)});
  EXPECT_EQ(f.tail_index(), 3);
  EXPECT_EQ(f.reduction_index(), 0);
}

TEST(Validate, MaximalIdealTimesAdic) {
  auto f = m_times_adic(kxy());
  EXPECT_EQ(f.reduction_index(), 1);
}

TEST(Validate, RejectsChainMissingTheFiltrationCondition) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  try {
    GoodFiltration::validate(Ideal::zero(r), m, {Ideal::unit(r), m.power(2)});
    FAIL() << "expected NotGoodFiltration";
  } catch (const NotGoodFiltration& e) {
    EXPECT_EQ(e.index, 0);
  }
}

TEST(Validate, RejectsAscendingStep) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  try {
    GoodFiltration::validate(Ideal::zero(r), m, {Ideal::unit(r), m.power(2), m});
    FAIL() << "expected NotGoodFiltration";
  } catch (const NotGoodFiltration& e) {
    EXPECT_EQ(e.index, 0);
  }
}

TEST(Validate, RejectsNonPrimaryIdeal) {
  auto r = kxy();
  EXPECT_THROW(GoodFiltration::adic(Ideal::zero(r), ideal(r, {"x"})), NotMPrimary);
  EXPECT_THROW(GoodFiltration::adic(Ideal::zero(r), ideal(r, {"x - 1", "y"})), NotMPrimary);
  EXPECT_THROW(GoodFiltration::validate(Ideal::zero(r), Ideal::maximal(r), {}), NotGoodFiltration);
}

TEST(ReductionIndex, Examples) {
  auto r = kxy();
  const Ideal i = ideal(r, {"x^2", "y^2"});
  EXPECT_EQ(GoodFiltration::adic(Ideal::zero(r), i).reduction_index(), 0);
  EXPECT_EQ(GoodFiltration::validate(Ideal::zero(r), i, {Ideal::unit(r), i, i.power(2)}).reduction_index(), 0);
  const Ideal m = Ideal::maximal(r);
  // A > m > m^2 > m^4 > m^6 ... with I = m^2: r = 2.
  auto f = GoodFiltration::validate(Ideal::zero(r), m.power(2), {Ideal::unit(r), m, m.power(2), m.power(4)});
  EXPECT_EQ(f.reduction_index(), 2);
}

TEST(Filtration, TailIsAdic) {
  auto f = m_times_adic(kxy());
  for (int k = 0; k < 6; ++k) {
    EXPECT_TRUE(f.level(k + 1).contains(f.primary() * f.level(k)));
    if (k >= f.tail_index()) EXPECT_EQ(f.level(k + 1), f.primary() * f.level(k) + f.base());
  }
}

TEST(Filtration, HilbertSamuelValues) {
  auto r1 = kx();
  EXPECT_EQ(GoodFiltration::adic(Ideal::zero(r1), ideal(r1, {"x^2"})).hilbert_samuel(3), 8u);
  auto r2 = kxy();
  EXPECT_EQ(GoodFiltration::adic(Ideal::zero(r2), Ideal::maximal(r2)).hilbert_samuel(2), 6u);
  EXPECT_EQ(m_times_adic(r2).hilbert_samuel(0), 1u);
}

TEST(ScaleFiltration, MaximalIdealGivesTheMixedChain) {
  auto r = kxy();
  const Ideal i = ideal(r, {"x^2", "y^2"});
  auto scaled = scale_filtration(GoodFiltration::adic(Ideal::zero(r), i), Ideal::maximal(r));
  auto expected = m_times_adic(r);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(scaled.level(k), expected.level(k)) << k;
}

TEST(ScaleFiltration, ByIShiftsTheAdicChain) {
  auto r = kxy();
  const Ideal i = ideal(r, {"x^2", "y^2"});
  auto f = GoodFiltration::adic(Ideal::zero(r), i);
  auto scaled = scale_filtration(f, i);
  EXPECT_LE(scaled.reduction_index(), 1);
  for (int k = 1; k < 5; ++k) EXPECT_EQ(scaled.level(k), i.power(k));
}

TEST(ScaleFiltration, RequiresQContainingI) {
  auto r = kxy();
  auto f = GoodFiltration::adic(Ideal::zero(r), ideal(r, {"x^2", "y^2"}));
  EXPECT_THROW(scale_filtration(f, ideal(r, {"x"})), QDoesNotContainI);
}

TEST(ScaleFiltration, ReductionIndexGrowsByAtMostOne) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  const Ideal i = ideal(r, {"x^2", "y^2"});
  std::vector<GoodFiltration> fs = {GoodFiltration::adic(Ideal::zero(r), i), m_times_adic(r),
                                    GoodFiltration::adic(ideal(r, {"x^2", "x*y"}), m),
                                    GoodFiltration::validate(Ideal::zero(r), m.power(2), {Ideal::unit(r), m, m.power(2), m.power(4)})};
  for (const auto& f : fs)
    for (const Ideal& q : {f.primary(), m}) EXPECT_LE(scale_filtration(f, q).reduction_index(), f.reduction_index() + 1);
}

TEST(QuotientFiltration, IdentityAndRestriction) {
  auto r = kxy();
  const Ideal m = Ideal::maximal(r);
  auto f = GoodFiltration::adic(Ideal::zero(r), m);
  auto same = quotient_filtration(f, Ideal::zero(r));
  for (int k = 0; k < 4; ++k) EXPECT_EQ(same.level(k), f.level(k));

  auto onto_y = quotient_filtration(f, ideal(r, {"x"}));
  for (int n = 0; n < 5; ++n) EXPECT_EQ(onto_y.hilbert_samuel(n), static_cast<std::size_t>(n + 1));
}

TEST(QuotientFiltration, ModuloSaturation) {
  auto r = kxy();
  const Ideal j = ideal(r, {"x^2", "x*y"});
  auto f = GoodFiltration::adic(j, Ideal::maximal(r));
  auto g = quotient_filtration(f, ideal(r, {"x"}));
  EXPECT_EQ(g.base(), ideal(r, {"x"}));
  for (int k = 0; k < 5; ++k) EXPECT_EQ(g.level(k), f.level(k) + ideal(r, {"x"}));
  EXPECT_LE(g.reduction_index(), f.reduction_index());
  EXPECT_THROW(quotient_filtration(f, ideal(r, {"y"})), BaseNotContained);
}

TEST(QuotientFiltration, ReductionIndexDoesNotGrow) {
  auto r = kxy();
  auto f = m_times_adic(r);
  for (auto n : {ideal(r, {"x"}), ideal(r, {"x*y"}), ideal(r, {"x^3", "y^2"})})
    EXPECT_LE(quotient_filtration(f, n).reduction_index(), f.reduction_index());
}

TEST(ModuleSpec, Examples) {
  auto r = kxy();
  auto s0 = module_spec(Ideal::zero(r));
  EXPECT_EQ(s0.d, 2);
  EXPECT_TRUE(s0.depth_positive);
  EXPECT_EQ(s0.h0_length, 0u);

  auto s1 = module_spec(ideal(r, {"x^2", "x*y"}));
  EXPECT_EQ(s1.d, 1);
  EXPECT_FALSE(s1.depth_positive);
  EXPECT_EQ(s1.saturation, ideal(r, {"x"}));
  EXPECT_EQ(s1.h0_length, 1u);

  EXPECT_EQ(module_spec(ideal(r, {"x^2", "x*y", "y^2"})).d, 0);
  EXPECT_THROW(module_spec(ideal(r, {"x^2 - y"})), ConfigurationError);
}
