#include <gtest/gtest.h>

#include <random>

#include "filtreg/errors.hpp"
#include "filtreg/hilbert_series.hpp"
#include "filtreg/ideal.hpp"
#include "filtreg/linalg.hpp"

using namespace filtreg;

namespace {

RingPtr kxy() { return make_ring(32003, {"x", "y"}); }
RingPtr kxyz() { return make_ring(32003, {"x", "y", "z"}); }

Ideal ideal(const RingPtr& r, std::vector<std::string> g) { return Ideal(r, g); }

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int max_deg, int terms) {
  Polynomial p = r->zero();
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int left = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (std::size_t v = 0; v < r->nvars() && left > 0; ++v) {
      int e = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      m.exp[v] = static_cast<std::uint16_t>(e);
      m.deg += static_cast<std::uint32_t>(e);
      left -= e;
    }
    p = p + Polynomial::monomial(r->field(), m, static_cast<Coeff>(rng() % 32002 + 1));
  }
  return p;
}

// Naive S-polynomial of two ring elements, computed without the engine.
Polynomial spoly(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.field();
  Monomial l = lcm(a.leading().m, b.leading().m);
  Polynomial pa = a.times(a.leading().m.quotient_of(l), f.inv(a.leading().c));
  Polynomial pb = b.times(b.leading().m.quotient_of(l), f.inv(b.leading().c));
  return pa - pb;
}

}  // namespace

TEST(Field, InverseAndSignedRepresentative) {
  PrimeField f(32003);
  for (Coeff a : {1u, 2u, 17u, 32002u}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.from_int(-1), 32002u);
  EXPECT_EQ(f.to_signed(32002), -1);
  EXPECT_THROW(PrimeField(32004), ParseError);
}

TEST(Parser, AcceptsSpecifiedSyntax) {
  auto r = kxy();
  Polynomial p = r->parse("x^2 + 3*x*y - y^2");
  EXPECT_EQ(r->to_string(p), "x^2 + 3*x*y - y^2");
  EXPECT_EQ(r->parse("2x y"), r->parse("2*x*y"));
  EXPECT_EQ(r->parse("(x+y)^2"), r->parse("x^2+2*x*y+y^2"));
  EXPECT_EQ(r->parse("-(x-y)"), r->parse("y-x"));
  EXPECT_EQ(r->parse("32004*x"), r->parse("x"));
  EXPECT_THROW(r->parse("x + z"), ParseError);
  EXPECT_THROW(r->parse("x^"), ParseError);
  EXPECT_THROW(r->parse("(x"), ParseError);
}

TEST(Groebner, MonomialGeneratorsAreAlreadyABasis) {
  auto r = kxy();
  auto b = ideal(r, {"x^2", "x*y"}).basis();
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], r->parse("x^2"));
  EXPECT_EQ(b[1], r->parse("x*y"));
}

TEST(Groebner, LinearElimination) {
  auto r = kxy();
  auto b = ideal(r, {"x+y", "x-y"}).basis();
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], r->parse("x"));
  EXPECT_EQ(b[1], r->parse("y"));
}

TEST(Groebner, HandBuchbergerRun) {
  auto r = kxy();
  // S(x^2+y^2, xy) = y(x^2+y^2) - x(xy) = y^3, irreducible; all further pairs reduce to 0.
  auto b = ideal(r, {"x^2+y^2", "x*y"}).basis();
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], r->parse("y^3"));
  EXPECT_EQ(b[1], r->parse("x^2+y^2"));
  EXPECT_EQ(b[2], r->parse("x*y"));
}

TEST(Groebner, BuchbergerCriterionOnRandomInputs) {
  auto r = kxyz();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(r, rng, 3, 3));
    Ideal i(r, gens);
    auto b = i.basis();
    std::vector<FreeVector> vecs;
    for (const auto& g : b) vecs.push_back(FreeVector::from_component(g, 0));
    for (std::size_t p = 0; p < b.size(); ++p)
      for (std::size_t q = p + 1; q < b.size(); ++q)
        EXPECT_TRUE(reduce_full(FreeVector::from_component(spoly(b[p], b[q]), 0), vecs).is_zero());
    for (const auto& g : gens) EXPECT_TRUE(i.contains(g));
  }
}

TEST(Groebner, NormalFormIsIdempotent) {
  auto r = kxyz();
  std::mt19937_64 rng(11);
  Ideal i = ideal(r, {"x^2+y*z", "y^2-x*z", "z^3+x*y"});
  for (int t = 0; t < 25; ++t) {
    Polynomial f = random_poly(r, rng, 5, 6);
    Polynomial nf = i.normal_form(f);
    EXPECT_EQ(i.normal_form(nf), nf);
    EXPECT_TRUE(i.contains(f - nf));
  }
}

TEST(Ideal, ColonExamples) {
  auto kx = make_ring(32003, {"x"});
  EXPECT_EQ(ideal(kx, {"x^2"}).colon(kx->parse("x")), ideal(kx, {"x"}));
  auto r = kxy();
  Ideal j = ideal(r, {"x^2", "x*y"});
  EXPECT_EQ(j.colon(r->parse("x")), ideal(r, {"x", "y"}));
  EXPECT_EQ(j.colon(r->one()), j);
}

TEST(Ideal, ColonTimesElementLiesInIdeal) {
  auto r = kxyz();
  std::mt19937_64 rng(3);
  Ideal j = ideal(r, {"x^2*y", "y^3 - x*z^2", "x*z"});
  for (int t = 0; t < 8; ++t) {
    Polynomial f = random_poly(r, rng, 2, 2);
    if (f.is_zero()) continue;
    Ideal c = j.colon(f);
    for (const auto& g : c.basis()) EXPECT_TRUE(j.contains(g * f));
  }
}

TEST(Ideal, Arithmetic) {
  auto r = kxy();
  EXPECT_EQ(ideal(r, {"x"}).intersect(ideal(r, {"y"})), ideal(r, {"x*y"}));
  EXPECT_EQ(ideal(r, {"x", "y"}).power(2), ideal(r, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(ideal(r, {"x^2", "x*y"}).saturation(Ideal::maximal(r)), ideal(r, {"x"}));
  EXPECT_EQ(ideal(r, {"x"}).power(0), Ideal::unit(r));
  EXPECT_THROW(ideal(r, {"x"}).power(-1), std::invalid_argument);
  EXPECT_EQ(ideal(r, {"x"}) + ideal(r, {"y"}), Ideal::maximal(r));
  EXPECT_TRUE(ideal(r, {"x", "y"}).contains(ideal(r, {"x^2", "x*y+y^3"})));
  EXPECT_FALSE(ideal(r, {"x^2"}).contains(ideal(r, {"x"})));
}

TEST(Ideal, IntersectionAgreesWithMonomialLcms) {
  // For monomial ideals the intersection is generated by pairwise lcms.
  auto r = kxyz();
  std::vector<std::string> a{"x^2", "y*z", "z^3"}, b{"x*y", "z^2", "y^4"};
  std::vector<Polynomial> lcms;
  for (const auto& s : a)
    for (const auto& t : b)
      lcms.push_back(Polynomial::monomial(r->field(), lcm(r->parse(s).leading().m, r->parse(t).leading().m)));
  EXPECT_EQ(ideal(r, a).intersect(ideal(r, b)), Ideal(r, lcms));
}

TEST(Ideal, PowerTimesIdealIsNextPower) {
  auto r = kxy();
  for (auto gens : std::vector<std::vector<std::string>>{{"x^2", "y^2"}, {"x^2+y^2", "x*y"}, {"x", "y^3"}}) {
    Ideal j = ideal(r, gens);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(j.power(k) * j, j.power(k + 1));
  }
}

TEST(Ideal, Colength) {
  auto r = kxy();
  EXPECT_EQ(Ideal::maximal(r).colength(), 1u);
  EXPECT_EQ(ideal(r, {"x^2", "y^2"}).colength(), 4u);
  EXPECT_THROW(ideal(r, {"x"}).colength(), NotCofinite);
  // Non-homogeneous: (x - y^2, y^3) has length 3.
  EXPECT_EQ(ideal(r, {"x-y^2", "y^3"}).colength(), 3u);
}

TEST(Ideal, GradedDim) {
  auto r = kxy();
  EXPECT_EQ(Ideal::zero(r).graded_dim(3), 4u);
  Ideal j = ideal(r, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(j.graded_dim(1), 2u);
  EXPECT_EQ(j.graded_dim(2), 0u);
}

TEST(Ideal, ColengthIsSumOfGradedDims) {
  auto r = kxyz();
  for (auto gens : std::vector<std::vector<std::string>>{
           {"x^2", "y^2", "z^2"}, {"x^2+y*z", "y^2+x*z", "z^2+x*y"}, {"x", "y^2", "z^3"}}) {
    Ideal j = ideal(r, gens);
    std::size_t total = 0;
    for (int n = 0; n <= 12; ++n) total += j.graded_dim(n);
    EXPECT_EQ(j.colength(), total);
  }
}

TEST(Ideal, Dimension) {
  auto r = kxyz();
  EXPECT_EQ(Ideal::zero(r).dimension(), 3);
  EXPECT_EQ(ideal(r, {"x*z", "y*z"}).dimension(), 2);
  EXPECT_EQ(Ideal::maximal(r).dimension(), 0);
  EXPECT_EQ(Ideal::unit(r).dimension(), -1);
}

TEST(HilbertSeries, NumeratorOfCompleteIntersection) {
  auto r = kxy();
  SeriesPoly n = hilbert_numerator(ideal(r, {"x^2", "y^2"}));
  EXPECT_EQ(n, (SeriesPoly{1, 0, -2, 0, 1}));
  auto d = dimension_of(n, 2);
  EXPECT_EQ(d.dim, 0);
  EXPECT_EQ(d.degree, 4);
}

TEST(HilbertSeries, AgreesWithGradedDims) {
  auto r = kxyz();
  Ideal j = ideal(r, {"x^2", "x*y", "x*z", "y^3"});
  SeriesPoly num = hilbert_numerator(j);
  // Expand num / (1-t)^3 as a power series.
  std::vector<std::int64_t> coeffs(15, 0);
  for (std::size_t k = 0; k < num.size() && k < coeffs.size(); ++k) coeffs[k] = num[k];
  for (int rep = 0; rep < 3; ++rep)
    for (std::size_t k = 1; k < coeffs.size(); ++k) coeffs[k] += coeffs[k - 1];
  for (int n = 0; n < 15; ++n) EXPECT_EQ(coeffs[static_cast<std::size_t>(n)], static_cast<std::int64_t>(j.graded_dim(n)));
  EXPECT_EQ(dimension_of(num, 3).dim, 1);
}

TEST(Linalg, ParallelMatchesSerial) {
  PrimeField f(32003);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    std::size_t rows = 5 + rng() % 60, cols = 5 + rng() % 60;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = (rng() % 3 == 0) ? static_cast<Coeff>(rng() % 32003) : 0;
    Echelon a = rref_serial(m, f);
    Echelon b = rref(m, f);
    EXPECT_EQ(a.pivots, b.pivots);
    EXPECT_EQ(a.form, b.form);
  }
}

TEST(Linalg, NullspaceIsKernel) {
  PrimeField f(101);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    std::size_t rows = 3 + rng() % 8, cols = 3 + rng() % 8;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<Coeff>(rng() % 3);
    Matrix k = nullspace(m, f);
    EXPECT_EQ(k.rows() + rank(m, f), cols);
    Matrix prod = multiply(m, k.transposed(), f);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod.at(i, j), 0u);
  }
}

TEST(Linalg, ReduceByDetectsRowSpaceMembership) {
  PrimeField f(7);
  Matrix m(0, 3);
  m.append_row({1, 2, 3});
  m.append_row({0, 1, 1});
  Echelon e = rref(m, f);
  EXPECT_EQ(reduce_by(e, {1, 3, 4}, f), (std::vector<Coeff>{0, 0, 0}));
  EXPECT_NE(reduce_by(e, {0, 0, 1}, f), (std::vector<Coeff>{0, 0, 0}));
}
