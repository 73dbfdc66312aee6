#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracle.hpp"
#include "support.hpp"

using namespace skewpbw;
using support::poly;

namespace {

Exponent random_exponent(std::size_t n, std::uint32_t max_degree, std::mt19937_64& rng) {
  Exponent e(n);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  for (std::uint32_t k = deg(rng); k > 0; --k) e[var(rng)] += 1;
  return e;
}

}  // namespace

TEST(Monomial, DeglexExamples) {
  const auto order = MonomialOrder::deglex();
  EXPECT_EQ(order.compare(Exponent{2, 1}, Exponent{1, 2}), std::strong_ordering::greater);
  EXPECT_EQ(order.compare(Exponent{0, 0}, Exponent{0, 0}), std::strong_ordering::equal);
  EXPECT_EQ(order.compare(Exponent{0, 3}, Exponent{1, 1}), std::strong_ordering::greater);
  EXPECT_THROW((void)order.compare(Exponent{1}, Exponent{1, 0}), InvalidArgument);
}

TEST(Monomial, BlockFrontDominates) {
  const auto order = MonomialOrder::block({0});
  EXPECT_EQ(order.compare(Exponent{1, 0}, Exponent{0, 5}), std::strong_ordering::greater);
}

TEST(Monomial, Degrevlex) {
  const auto order = MonomialOrder::degrevlex();
  // x*z^... : degrevlex prefers fewer of the last variable.
  EXPECT_EQ(order.compare(Exponent{0, 2, 0}, Exponent{1, 0, 1}), std::strong_ordering::greater);
  EXPECT_EQ(MonomialOrder::deglex().compare(Exponent{0, 2, 0}, Exponent{1, 0, 1}), std::strong_ordering::less);
}

TEST(Monomial, Divides) {
  EXPECT_EQ(monomial_divides(Exponent{0, 1, 0}, Exponent{0, 1, 2}), (Exponent{0, 0, 2}));
  EXPECT_EQ(monomial_divides(Exponent{1, 0}, Exponent{0, 1}), std::nullopt);
  EXPECT_EQ(monomial_divides(Exponent{0, 0}, Exponent{3, 4}), (Exponent{3, 4}));
  EXPECT_THROW((void)monomial_divides(Exponent{0}, Exponent{0, 0}), InvalidArgument);
}

TEST(Poly, LeadingData) {
  const auto R = support::ring("witten");
  const auto f = poly(R, "x^2*y + y*z^2 + x*z");
  EXPECT_EQ(f.leading_exponent(), (Exponent{2, 1, 0}));
  const auto zero = leading_data(R->order(), R->zero());
  EXPECT_TRUE(zero.zero);
  const auto c = leading_data(R->order(), R->constant(7));
  EXPECT_FALSE(c.zero);
  EXPECT_EQ(c.monomial, (Exponent{0, 0, 0}));
  EXPECT_EQ(c.coefficient, R->field().from_int(7));
}

TEST(Poly, CommuteScalar) {
  const auto Qp = support::ring("qplane_q2");
  const auto a = commute_scalar(Qp, Exponent{3, 0}, Qp->field().from_int(5));
  EXPECT_EQ(a.twisted, Qp->field().from_int(5));
  EXPECT_TRUE(a.remainder.is_zero());

  const auto C = support::ring("qplane_conj");
  const Scalar i = C->field().imaginary_unit();
  EXPECT_EQ(commute_scalar(C, Exponent{1, 0}, i).twisted, -i);
  EXPECT_EQ(commute_scalar(C, Exponent{2, 0}, i).twisted, i);
  EXPECT_EQ(C->variable(0) * C->constant(i), C->term(-i, Exponent{1, 0}));
}

TEST(Poly, MonomialProductExamples) {
  const auto M = support::ring("multiparam3");
  const auto yx = monomial_product(M, Exponent{0, 1, 0}, Exponent{1, 0, 0});
  EXPECT_EQ(yx.coefficient, parse_scalar("2*i", M->field()));
  EXPECT_TRUE(yx.remainder.is_zero());

  const auto W = support::ring("witten");
  const auto zx = monomial_product(W, Exponent{0, 0, 1}, Exponent{1, 0, 0});
  EXPECT_TRUE(zx.coefficient.is_one());
  EXPECT_EQ(zx.remainder, poly(W, "-x"));

  const auto xx = monomial_product(W, Exponent{1, 0, 0}, Exponent{1, 0, 0});
  EXPECT_TRUE(xx.coefficient.is_one());
  EXPECT_TRUE(xx.remainder.is_zero());
}

TEST(Poly, MultiplyExamples) {
  const auto W = support::ring("witten");
  EXPECT_EQ(W->variable(2) * W->variable(0), poly(W, "x*z - x"));
  const auto A = support::ring("weyl3");
  const auto x = A->variable(0), y = A->variable(1);
  EXPECT_EQ((x - A->one()) * y - y * (x - A->one()), A->one());
  const auto f = poly(W, "x^2*y + z - 3");
  EXPECT_EQ(f * W->one(), f);
  EXPECT_EQ(W->one() * f, f);
}

TEST(Poly, QuantumPlaneParse) {
  const auto Qp = support::ring("qplane_q2");
  EXPECT_EQ(poly(Qp, "y*x"), poly(Qp, "2*x*y"));
}

// Every ring operation against the free-algebra rewriting oracle.
TEST(PolyProperties, ProductsMatchRewritingOracle) {
  std::mt19937_64 rng(21);
  for (const char* name : support::kShipped) {
    const auto R = support::ring(name);
    for (int k = 0; k < 60; ++k) {
      const auto f = random_polynomial(R, rng, 3, 3), g = random_polynomial(R, rng, 3, 3);
      ASSERT_EQ(f * g, oracle::multiply(f, g)) << name << ": (" << f << ") * (" << g << ")";
    }
  }
}

TEST(PolyProperties, RingAxioms) {
  std::mt19937_64 rng(22);
  for (const char* name : support::kShipped) {
    const auto R = support::ring(name);
    for (int k = 0; k < 500; ++k) {
      const auto f = random_polynomial(R, rng, 4, 3), g = random_polynomial(R, rng, 4, 3),
                 h = random_polynomial(R, rng, 4, 3);
      ASSERT_EQ((f * g) * h, f * (g * h)) << name << " f=" << f << " g=" << g << " h=" << h;
      ASSERT_EQ(f * (g + h), f * g + f * h) << name;
      ASSERT_EQ((g + h) * f, g * f + h * f) << name;
    }
  }
}

TEST(PolyProperties, OrderCompatibility) {
  std::mt19937_64 rng(23);
  for (const char* name : support::kShipped) {
    for (const auto& order : {MonomialOrder::deglex(), MonomialOrder::degrevlex()}) {
      const auto R = support::ring(name, order);
      const std::size_t n = R->size();
      for (int k = 0; k < 200; ++k) {
        Exponent a = random_exponent(n, 4, rng), b = random_exponent(n, 4, rng);
        if (a == b) continue;
        if (order.greater(b, a)) std::swap(a, b);
        const auto gamma = R->monomial(random_exponent(n, 3, rng)), lambda = R->monomial(random_exponent(n, 3, rng));
        const auto lhs = gamma * R->monomial(a) * lambda, rhs = gamma * R->monomial(b) * lambda;
        ASSERT_TRUE(order.greater(lhs.leading_exponent(), rhs.leading_exponent())) << name;
      }
    }
  }
}

TEST(PolyProperties, MonomialProductContract) {
  std::mt19937_64 rng(24);
  for (const char* name : support::kShipped) {
    const auto R = support::ring(name);
    for (int k = 0; k < 200; ++k) {
      const Exponent a = random_exponent(R->size(), 4, rng), b = random_exponent(R->size(), 4, rng);
      const auto mp = monomial_product(R, a, b);
      ASSERT_FALSE(mp.coefficient.is_zero());
      ASSERT_LT(mp.remainder.degree(), static_cast<int>((a + b).degree()));
      ASSERT_EQ(R->term(mp.coefficient, a + b) + mp.remainder, R->monomial(a) * R->monomial(b)) << name;
    }
  }
}

TEST(PolyProperties, DomainProperty) {
  std::mt19937_64 rng(25);
  for (const char* name : support::kShipped) {
    const auto R = support::ring(name);
    for (int k = 0; k < 200; ++k) {
      const auto f = random_polynomial(R, rng, 3, 3), g = random_polynomial(R, rng, 3, 3);
      if (f.is_zero() || g.is_zero()) continue;
      const auto fg = f * g;
      ASSERT_FALSE(fg.is_zero());
      ASSERT_EQ(fg.degree(), f.degree() + g.degree());
      // lc(fg) = lc(f) sigma^alpha(lc(g)) c_{alpha,beta} in deglex.
      const auto mp = monomial_product(R, f.leading_exponent(), g.leading_exponent());
      const Scalar expected =
          f.leading_coefficient() * R->algebra().twist(f.leading_exponent(), g.leading_coefficient()) * mp.coefficient;
      ASSERT_EQ(fg.leading_exponent(), f.leading_exponent() + g.leading_exponent());
      ASSERT_EQ(fg.leading_coefficient(), expected) << name;
    }
  }
}

TEST(PolyProperties, CommutativeConvolution) {
  std::mt19937_64 rng(26);
  const auto R = support::ring("commutative");
  for (int k = 0; k < 300; ++k) {
    const auto f = random_polynomial(R, rng, 4, 4), g = random_polynomial(R, rng, 4, 4);
    std::map<Exponent, Scalar> conv;
    for (const auto& s : f.terms())
      for (const auto& t : g.terms()) {
        auto [it, inserted] = conv.try_emplace(s.exponent + t.exponent, s.coefficient * t.coefficient);
        if (!inserted) it->second += s.coefficient * t.coefficient;
      }
    TermVector terms;
    for (auto& [e, c] : conv) terms.push_back({e, c});
    ASSERT_EQ(f * g, Polynomial(R, terms));
  }
}

TEST(PolyProperties, ScalarsPassThroughSigma) {
  std::mt19937_64 rng(27);
  const auto R = support::ring("qplane_conj");
  for (int k = 0; k < 100; ++k) {
    const auto f = random_polynomial(R, rng, 3, 3);
    const Scalar r = R->field().random(rng);
    ASSERT_EQ(f * R->constant(r), f.times_scalar_right(r));
    ASSERT_EQ(R->constant(r) * f, r * f);
  }
}
