#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "skewpbw/groebner.hpp"
#include "support.hpp"

using namespace skewpbw;
using support::poly;

namespace {

Polynomial reexpand(const DivisionResult& d, const std::vector<Polynomial>& divisors) {
  Polynomial sum = d.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) sum += oracle::multiply(d.quotients[i], divisors[i]);
  return sum;
}

bool reducible(const Exponent& e, const std::vector<Polynomial>& divisors) {
  for (const auto& g : divisors)
    if (monomial_divides(g.leading_exponent(), e)) return true;
  return false;
}

std::vector<Polynomial> random_nonzero(const RingPtr& R, std::mt19937_64& rng, std::size_t count, std::uint32_t deg,
                                       std::size_t terms) {
  std::vector<Polynomial> out;
  while (out.size() < count) {
    auto f = random_polynomial(R, rng, deg, terms);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

Polynomial random_combination(const std::vector<Polynomial>& gens, std::mt19937_64& rng, std::uint32_t deg) {
  Polynomial f = gens.front().ring()->zero();
  for (const auto& g : gens) f += random_polynomial(g.ring(), rng, deg, 3) * g;
  return f;
}

}  // namespace

TEST(Divide, WittenIdentity) {
  const auto W = support::ring("witten");
  const auto f = poly(W, "x^2*y + x*z + y*z");
  const auto F = parse_polynomial_list("x-1, y+2, z+3", W);
  const auto d = divide(f, F);
  EXPECT_EQ(reexpand(d, F), f);
  // Over a field every remainder w.r.t. {x_i - z_i} is a scalar.
  EXPECT_TRUE(d.remainder.is_constant());
}

TEST(Divide, PrintedDecompositionReexpands) {
  const auto W = support::ring("witten");
  const auto F = parse_polynomial_list("x-1, y+2, z+3", W);
  DivisionResult d{{poly(W, "(1/2)*x*y + (1/4)*y"), poly(W, "1/4"), W->zero()}, poly(W, "x*z + y*z - 1/2")};
  EXPECT_EQ(reexpand(d, F), poly(W, "x^2*y + x*z + y*z"));
}

TEST(Divide, SelfDivision) {
  const auto W = support::ring("witten");
  const auto f = poly(W, "x*y - 2*z + 1");
  const auto d = divide(f, {f});
  EXPECT_EQ(d.quotients[0], W->one());
  EXPECT_TRUE(d.remainder.is_zero());
}

TEST(Divide, Classical) {
  const auto R = support::ring("commutative");
  const auto d = divide(poly(R, "x^2*y"), {poly(R, "x")});
  EXPECT_EQ(d.quotients[0], poly(R, "x*y"));
  EXPECT_TRUE(d.remainder.is_zero());
}

TEST(Divide, Errors) {
  const auto R = support::ring("commutative");
  EXPECT_THROW(divide(R->variable(0), {}), InvalidArgument);
  EXPECT_THROW(divide(R->variable(0), {R->zero()}), InvalidArgument);
}

TEST(LeftGroebner, MonomialIdeal) {
  const auto R = support::ring("commutative");
  const auto h = left_groebner(parse_polynomial_list("x, y", R));
  EXPECT_EQ(h.status, IdealStatus::Proper);
  EXPECT_EQ(h.basis.elements, parse_polynomial_list("x, y", R));
}

TEST(LeftGroebner, QuantumPlaneUnit) {
  const auto R = support::ring("qplane_m1");
  const auto gens = parse_polynomial_list("x-1, y-1", R);
  const auto h = left_groebner(gens, {}, true);
  EXPECT_EQ(h.status, IdealStatus::ImproperUnit);
  ASSERT_TRUE(h.basis.cofactors);
  const auto& c = h.basis.cofactors->front();
  EXPECT_EQ(oracle::multiply(c[0], gens[0]) + oracle::multiply(c[1], gens[1]), R->one());
  // Truncated span check: 1 lies in the left multiples of degree <= 2.
  EXPECT_TRUE(oracle::in_span(oracle::left_multiples(gens, 2), R->one()));
}

TEST(LeftGroebner, WeylUnit) {
  const auto R = support::ring("weyl3");
  const auto gens = parse_polynomial_list("x-1, y, z", R);
  const auto h = left_groebner(gens, {}, true);
  EXPECT_EQ(h.status, IdealStatus::ImproperUnit);
  EXPECT_EQ(is_member_left(R->one(), h), Membership::Yes);
  const auto& c = h.basis.cofactors->front();
  Polynomial sum = R->zero();
  for (std::size_t k = 0; k < 3; ++k) sum += oracle::multiply(c[k], gens[k]);
  EXPECT_EQ(sum, R->one());
}

TEST(LeftGroebner, MembershipExamples) {
  const auto Qp = support::ring("qplane_q2");
  EXPECT_EQ(is_member_left(poly(Qp, "x^2*y"), left_groebner({poly(Qp, "y")})), Membership::Yes);
  const auto R = support::ring("commutative");
  EXPECT_EQ(is_member_left(R->one(), left_groebner(parse_polynomial_list("x, y", R))), Membership::No);
}

TEST(LeftGroebner, BudgetGivesUnknown) {
  const auto R = support::ring("commutative");
  Budget tight;
  tight.max_degree = 2;
  const auto h = left_groebner(parse_polynomial_list("x^2 - y, x*y - 1", R), tight);
  EXPECT_EQ(h.status, IdealStatus::Unknown);
  EXPECT_FALSE(h.diagnostic.empty());
  EXPECT_EQ(is_member_left(R->one(), h), Membership::Unknown);
  EXPECT_THROW(normal_form(R->one(), h), InvalidArgument);
}

TEST(LeftGroebner, Serialization) {
  const auto R = support::ring("qplane_m1");
  const auto h = left_groebner(parse_polynomial_list("x-1, y-1", R), {}, true);
  const auto doc = nlohmann::json::parse(serialize_ideal(h));
  EXPECT_EQ(doc["status"], "improper_unit");
  EXPECT_EQ(doc["presentation"], R->presentation().digest());
  EXPECT_EQ(doc["order"], "deglex");
  EXPECT_TRUE(doc.contains("certificates"));
}

TEST(Orders, ParseAndPrint) {
  const std::vector<std::string> names{"x", "y", "z"};
  for (const char* text : {"deglex", "degrevlex", "block:y,z"})
    EXPECT_EQ(order_to_string(parse_order(text, names), names), text);
  EXPECT_THROW(parse_order("block:w", names), Error);
  EXPECT_THROW(parse_order("lex", names), Error);
}

TEST(Orders, IncompatibleOrderRejected) {
  // yx = xy + z: the lower term z must stay below xy.
  Presentation P(make_field(FieldSpec::rationals()), {"x", "y", "z"});
  Relation r = P.relation(0, 1);
  r.linear[2] = P.field().one();
  P.set_relation(0, 1, r);
  EXPECT_NO_THROW(Ring::create(P, MonomialOrder::deglex()));
  EXPECT_THROW(Ring::create(P, MonomialOrder::block({2})), InvalidArgument);
}

TEST(Saturate, QuantumPlaneExamples) {
  for (const char* name : {"qplane_m1", "qplane_q2", "qplane_zeta3"}) {
    const auto R = support::ring(name);
    const auto xy = two_sided_saturate(parse_polynomial_list("x, y", R));
    EXPECT_EQ(xy.status, IdealStatus::Proper);
    EXPECT_EQ(xy.basis.elements, parse_polynomial_list("x, y", R));
  }
  const auto R = support::ring("qplane_m1");
  EXPECT_EQ(two_sided_saturate(parse_polynomial_list("x-1, y-1", R)).status, IdealStatus::ImproperUnit);
  EXPECT_TRUE(oracle::in_span(oracle::two_sided_multiples(parse_polynomial_list("x-1, y-1", R), 3), R->one()));
  const auto h = two_sided_saturate(parse_polynomial_list("x-1, y", R));
  EXPECT_EQ(h.status, IdealStatus::Proper);
  EXPECT_EQ(h.basis.elements, parse_polynomial_list("x-1, y", R));
  EXPECT_EQ(is_member_left(R->variable(0), h), Membership::No);
  EXPECT_EQ(normal_form(R->variable(0), h), R->one());
}

TEST(Intersect, Examples) {
  const auto R = support::ring("commutative");
  auto r = intersect_left({R->variable(0)}, {R->variable(1)});
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.generators, std::vector<Polynomial>{poly(R, "x*y")});

  const auto f = poly(R, "x^2 + y - 1");
  r = intersect_left({f}, {f});
  ASSERT_EQ(r.generators.size(), 1u);
  EXPECT_EQ(r.generators[0], f.monic());

  const auto Qp = support::ring("qplane_q2");
  r = intersect_left({Qp->variable(0)}, {Qp->variable(1)});
  const auto Ix = left_groebner({Qp->variable(0)}), Iy = left_groebner({Qp->variable(1)});
  bool has_xy = false;
  for (const auto& g : r.generators) {
    EXPECT_EQ(is_member_left(g, Ix), Membership::Yes);
    EXPECT_EQ(is_member_left(g, Iy), Membership::Yes);
    has_xy = has_xy || g == poly(Qp, "x*y");
  }
  EXPECT_TRUE(has_xy);
  EXPECT_EQ(poly(Qp, "y*x"), poly(Qp, "2*x*y"));
}

TEST(CentralExtension, FreshName) {
  const auto R = support::ring("commutative");
  const auto E = central_extension(R, "x");
  EXPECT_EQ(E->presentation().name(0), "x_");
  const auto f = poly(R, "x*y + 1");
  EXPECT_EQ(drop_front_variable(lift_to_extension(f, E), R), f);
  EXPECT_THROW(drop_front_variable(E->variable(0), R), InvalidArgument);
}

// ----------------------------------------------------------------- properties

TEST(GroebnerProperties, DivisionIdentity) {
  std::mt19937_64 rng(41);
  for (const char* name : support::kShipped) {
    for (const auto& order : {MonomialOrder::deglex(), MonomialOrder::degrevlex()}) {
      const auto R = support::ring(name, order);
      for (int k = 0; k < 500; ++k) {
        const auto f = random_polynomial(R, rng, 4, 5);
        const auto F = random_nonzero(R, rng, 1 + k % 3, 2, 3);
        const auto d = divide(f, F);
        ASSERT_EQ(reexpand(d, F), f) << name;
        for (const auto& t : d.remainder.terms()) ASSERT_FALSE(reducible(t.exponent, F)) << name;
        if (f.is_zero()) continue;
        // lm(f) = max(lm(lm(q_i) lm(f_i)), lm(h)).
        Exponent top = d.remainder.is_zero() ? Exponent(R->size()) : d.remainder.leading_exponent();
        bool any = !d.remainder.is_zero();
        for (std::size_t i = 0; i < F.size(); ++i) {
          if (d.quotients[i].is_zero()) continue;
          const Exponent e = d.quotients[i].leading_exponent() + F[i].leading_exponent();
          if (!any || order.greater(e, top)) top = e;
          any = true;
        }
        ASSERT_EQ(top, f.leading_exponent()) << name;
      }
    }
  }
}

TEST(GroebnerProperties, CertificatesAndCompleteness) {
  std::mt19937_64 rng(42);
  for (const char* name : support::kShipped) {
    const auto R = support::ring(name);
    for (int k = 0; k < 25; ++k) {
      const auto gens = random_nonzero(R, rng, 1 + k % 3, 2, 3);
      const auto h = left_groebner(gens, {}, true);
      ASSERT_NE(h.status, IdealStatus::Unknown) << name;
      ASSERT_TRUE(h.basis.cofactors);
      // Soundness: each basis element is the recorded combination.
      for (std::size_t e = 0; e < h.basis.elements.size(); ++e) {
        Polynomial sum = R->zero();
        for (std::size_t j = 0; j < gens.size(); ++j) sum += oracle::multiply((*h.basis.cofactors)[e][j], gens[j]);
        ASSERT_EQ(sum, h.basis.elements[e]) << name;
      }
      if (h.status == IdealStatus::ImproperUnit) continue;
      // Reducedness: no term of an element is divisible by another lm.
      for (std::size_t a = 0; a < h.basis.elements.size(); ++a)
        for (std::size_t b = 0; b < h.basis.elements.size(); ++b)
          for (const auto& t : h.basis.elements[a].terms())
            if (a != b) ASSERT_FALSE(monomial_divides(h.basis.elements[b].leading_exponent(), t.exponent));
      for (int m = 0; m < 10; ++m) {
        const auto r = random_combination(gens, rng, 3);
        ASSERT_EQ(is_member_left(r, h), Membership::Yes) << name;
        if (!r.is_zero()) ASSERT_TRUE(reducible(r.leading_exponent(), h.basis.elements)) << name;
      }
    }
  }
}

TEST(GroebnerProperties, SaturationFixpoint) {
  std::mt19937_64 rng(43);
  for (const char* name : support::kShipped) {
    const auto R = support::ring(name);
    for (int k = 0; k < 10; ++k) {
      const auto gens = random_nonzero(R, rng, 1 + k % 2, 2, 2);
      const auto h = two_sided_saturate(gens);
      if (h.status != IdealStatus::Proper) continue;
      for (const auto& g : h.basis.elements) {
        for (std::size_t j = 0; j < R->size(); ++j)
          ASSERT_TRUE(reduce(g * R->variable(j), h.basis.elements).is_zero()) << name;
        if (!R->presentation().all_sigma_trivial())
          ASSERT_TRUE(reduce(g.times_scalar_right(R->field().imaginary_unit()), h.basis.elements).is_zero());
      }
      // Two-sided multiples up to degree 3 of the generators are members.
      for (const auto& m : oracle::two_sided_multiples(gens, 3)) ASSERT_EQ(is_member_left(m, h), Membership::Yes);
    }
  }
}

TEST(GroebnerProperties, SaturatedBasisInTruncatedSpan) {
  // Every basis element of low degree is a two-sided combination of the
  // generators: check in the truncated span one degree above it.
  std::mt19937_64 rng(44);
  for (const char* name : {"qplane_m1", "qplane_q2", "weyl3", "qplane_conj"}) {
    const auto R = support::ring(name);
    for (int k = 0; k < 6; ++k) {
      const auto gens = random_nonzero(R, rng, 2, 1, 3);
      const auto h = two_sided_saturate(gens);
      ASSERT_NE(h.status, IdealStatus::Unknown);
      const auto span = oracle::two_sided_multiples(gens, 3);
      if (h.status == IdealStatus::ImproperUnit) {
        ASSERT_TRUE(oracle::in_span(span, R->one())) << name;
        continue;
      }
      for (const auto& g : h.basis.elements)
        if (g.degree() <= 1) ASSERT_TRUE(oracle::in_span(span, g)) << name << " " << g;
    }
  }
}

TEST(GroebnerProperties, IntersectionMembers) {
  std::mt19937_64 rng(45);
  for (const char* name : {"commutative", "qplane_m1", "qplane_q2", "witten", "weyl3"}) {
    const auto R = support::ring(name);
    for (int k = 0; k < 10; ++k) {
      const auto I = random_nonzero(R, rng, 1, 2, 2), J = random_nonzero(R, rng, 1, 2, 2);
      const auto r = intersect_left(I, J);
      const auto hI = left_groebner(I), hJ = left_groebner(J);
      for (const auto& g : r.generators) {
        ASSERT_EQ(is_member_left(g, hI), Membership::Yes) << name;
        ASSERT_EQ(is_member_left(g, hJ), Membership::Yes) << name;
      }
      // In the commutative case the product lies in the intersection.
      if (r.complete && std::string(name) == "commutative")
        ASSERT_EQ(is_member_left(I[0] * J[0], left_groebner(r.generators)), Membership::Yes);
    }
  }
}

TEST(GroebnerProperties, CommutativeMembershipOracle) {
  std::mt19937_64 rng(46);
  const auto R = support::ring("commutative");
  for (int k = 0; k < 30; ++k) {
    const auto gens = random_nonzero(R, rng, 1 + k % 3, 3, 3);
    const auto h = left_groebner(gens);
    const auto span = oracle::left_multiples(gens, 8);
    for (int m = 0; m < 4; ++m) {
      const auto f = m % 2 ? random_combination(gens, rng, 2) : random_polynomial(R, rng, 4, 4);
      const bool expected = oracle::in_span(span, f);
      ASSERT_EQ(is_member_left(f, h) == Membership::Yes, expected) << f;
    }
  }
}
