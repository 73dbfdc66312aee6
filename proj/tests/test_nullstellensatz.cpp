#include <gtest/gtest.h>

#include <random>

#include "radical_oracle.hpp"
#include "skewpbw/normality.hpp"
#include "skewpbw/nullstellensatz.hpp"
#include "support.hpp"

using namespace skewpbw;
using support::poly;

namespace {

RingPtr uniform_quantum_space(std::size_t n, const std::string& q) {
  std::string doc = "field: cyclotomic:4\nvars: ";
  for (std::size_t i = 0; i < n; ++i) doc += (i ? ", x" : "x") + std::to_string(i + 1);
  doc += "\nrelations:\n";
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      doc += "  x" + std::to_string(j + 1) + "*x" + std::to_string(i + 1) + " = " + q + "*x" + std::to_string(i + 1) +
             "*x" + std::to_string(j + 1) + "\n";
  return Ring::create(parse_presentation(doc));
}

RingPtr commutative_uv(const std::string& field = "Q") {
  return Ring::create(parse_presentation("field: " + field + "\nvars: u, v\n"));
}

}  // namespace

TEST(Center, QuantumPlanes) {
  const std::pair<const char*, std::uint32_t> cases[] = {{"qplane_m1", 2}, {"qplane_zeta3", 3}, {"qplane_zeta4", 4},
                                                        {"qplane_q2_gf5", 4}, {"commutative", 1}};
  for (const auto& [name, L] : cases) {
    const auto R = support::ring(name);
    const auto C = center_generators(R);
    EXPECT_TRUE(C.verified) << name;
    EXPECT_TRUE(C.polynomial_ring) << name;
    EXPECT_EQ(C.exponents, (std::vector<std::uint32_t>{L, L})) << name;
    ASSERT_EQ(C.generators.size(), 2u);
    EXPECT_EQ(C.generators[0], R->variable(0).pow(L));
    EXPECT_EQ(C.generators[1], R->variable(1).pow(L));
  }
}

TEST(Center, CentralityWitness) {
  const auto R = support::ring("qplane_m1");
  EXPECT_EQ(poly(R, "y*x^2"), poly(R, "x^2*y"));
}

TEST(Center, EvenUniformSpace) {
  const auto R = uniform_quantum_space(4, "-1");
  const auto C = center_generators(R);
  EXPECT_EQ(C.exponents, (std::vector<std::uint32_t>(4, 2)));
  // With three variables x1*x2*x3 is central as well.
  EXPECT_THROW(center_generators(uniform_quantum_space(3, "-1")), Unsupported);
}

TEST(Center, UnsupportedCases) {
  EXPECT_THROW(center_generators(support::ring("qplane_q2")), Unsupported);      // 2 has infinite order
  EXPECT_THROW(center_generators(support::ring("multiparam3")), Unsupported);   // 2i likewise
  EXPECT_THROW(center_generators(support::ring("witten")), Unsupported);        // lower terms
  EXPECT_THROW(center_generators(support::ring("qplane_conj")), Unsupported);   // sigma moves scalars
}

TEST(Center, RootOfUnityOrder) {
  const Field& F = make_field(FieldSpec::cyclotomic(12));
  EXPECT_EQ(root_of_unity_order(F.zeta()), 12u);
  EXPECT_EQ(root_of_unity_order(F.zeta().pow(4)), 3u);
  EXPECT_EQ(root_of_unity_order(F.from_int(2)), std::nullopt);
  EXPECT_EQ(root_of_unity_order(make_field(FieldSpec::prime(5)).from_int(2)), 4u);
}

TEST(Contraction, Examples) {
  const auto R = support::ring("qplane_m1");
  const auto C = center_generators(R);
  const auto u2 = C.center_ring->variable(0).pow(2);
  const auto J = contract_to_center(two_sided_saturate({poly(R, "x^4")}), C, 4);
  EXPECT_NE(std::find(J.central.begin(), J.central.end(), u2), J.central.end());

  const auto Jx = contract_to_center(two_sided_saturate({R->variable(0)}), C, 2);
  EXPECT_NE(std::find(Jx.central.begin(), Jx.central.end(), C.center_ring->variable(0)), Jx.central.end());

  const auto all = contract_to_center(two_sided_saturate({R->one()}), C, 4);
  EXPECT_EQ(all.central.size(), 6u);  // 1, u, v, u^2, uv, v^2
}

TEST(Contraction, CentralAndMembers) {
  std::mt19937_64 rng(61);
  for (const char* name : {"qplane_m1", "qplane_zeta3", "commutative"}) {
    const auto R = support::ring(name);
    const auto C = center_generators(R);
    for (int k = 0; k < 5; ++k) {
      const auto I = two_sided_saturate({random_polynomial(R, rng, 3, 2) + R->variable(k % 2).pow(3)});
      ASSERT_NE(I.status, IdealStatus::Unknown);
      const auto J = contract_to_center(I, C, 4);
      for (std::size_t e = 0; e < J.lifted.size(); ++e) {
        ASSERT_TRUE(central_probe(J.lifted[e])) << name;
        ASSERT_EQ(is_member_left(J.lifted[e], I), Membership::Yes) << name;
        ASSERT_EQ(C.lift(J.central[e]), J.lifted[e]);
      }
    }
  }
}

TEST(Radical, Examples) {
  const auto R = commutative_uv();
  EXPECT_EQ(radical_membership_commutative(poly(R, "u"), {poly(R, "u^2")}), Membership::Yes);
  EXPECT_EQ(radical_membership_commutative(poly(R, "u+1"), {poly(R, "u^2")}), Membership::No);
  EXPECT_EQ(radical_membership_commutative(poly(R, "u*v"), {poly(R, "u^2*v"), poly(R, "u*v^2")}), Membership::Yes);
  EXPECT_EQ(radical_oracle::power_search(poly(R, "u*v"), {poly(R, "u^2*v"), poly(R, "u*v^2")}), 2u);
}

TEST(Radical, AgreesWithPowerSearch) {
  std::mt19937_64 rng(62);
  for (const char* field : {"Q", "gf:5"}) {
    const auto R = commutative_uv(field);
    for (int k = 0; k < 25; ++k) {
      const auto in = radical_oracle::random_instance(R, rng);
      const bool expected = radical_oracle::power_search(in.f, in.J) > 0;
      ASSERT_EQ(radical_membership_commutative(in.f, in.J) == Membership::Yes, expected)
          << field << " " << in.family << " f=" << in.f;
    }
  }
}

TEST(PointsIdeal, Examples) {
  const auto R = commutative_uv();
  const Field& Q = R->field();
  EXPECT_EQ(commutative_points_ideal(R, {{Q.zero(), Q.zero()}}), parse_polynomial_list("u, v", R));
  EXPECT_EQ(commutative_points_ideal(R, {}), std::vector<Polynomial>{R->one()});
  const auto G = commutative_points_ideal(R, {{Q.one(), Q.zero()}, {Q.zero(), Q.one()}});
  const auto h = left_groebner(G);
  EXPECT_EQ(is_member_left(poly(R, "u^2 - u"), h), Membership::Yes);
  EXPECT_EQ(is_member_left(poly(R, "u + v - 1"), h), Membership::Yes);
  // Vanishes exactly on the two points of a 5x5 grid.
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const Point p{Q.from_int(a), Q.from_int(b)};
      bool zero = true;
      for (const auto& g : G) zero = zero && evaluate_commutative(g, p).is_zero();
      EXPECT_EQ(zero, (a == 1 && b == 0) || (a == 0 && b == 1));
    }
}

TEST(Nilpotency, Examples) {
  const auto R = support::ring("qplane_m1");
  const auto I = two_sided_saturate({poly(R, "x^4")});
  EXPECT_EQ(central_nilpotency(poly(R, "x^2"), I, 4).exponent, 2u);
  EXPECT_EQ(central_nilpotency(poly(R, "y^2"), I, 6).exponent, std::nullopt);
  EXPECT_EQ(central_nilpotency(R->zero(), I, 4).exponent, 1u);
  EXPECT_THROW(central_nilpotency(R->variable(0), I, 4), InvalidArgument);
}

TEST(Sandwich, QuantumPlane) {
  const auto R = support::ring("qplane_m1");
  const auto C = center_generators(R);
  PointIdealCache cache(R);
  const auto I = two_sided_saturate({poly(R, "x^4")});
  const auto report = verify_sandwich(I, C, SearchDomain::integer_grid(R->field(), 2, -2, 2), 4, 4, cache);
  EXPECT_EQ(report.first_inclusion, Verdict::Confirmed);
  EXPECT_EQ(report.second_inclusion, Verdict::Confirmed);
  const auto u = C.center_ring->variable(0);
  bool found = false;
  for (const auto& g : report.generators) {
    if (!(g.central == u)) continue;
    found = true;
    EXPECT_EQ(g.lifted, poly(R, "x^2"));
    EXPECT_EQ(g.nilpotency, 2u);
    EXPECT_TRUE(g.vanishes_on_V);
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(report.center_points.size(), 5u);
}

TEST(Sandwich, Commutative) {
  const auto R = support::ring("commutative");
  const auto C = center_generators(R);
  PointIdealCache cache(R);
  const auto I = two_sided_saturate(parse_polynomial_list("x^2, y", R));
  const auto report = verify_sandwich(I, C, SearchDomain::integer_grid(R->field(), 2, -2, 2), 2, 4, cache);
  EXPECT_EQ(report.first_inclusion, Verdict::Confirmed);
  EXPECT_EQ(report.second_inclusion, Verdict::Confirmed);
  std::vector<Polynomial> lifted;
  for (const auto& g : report.generators) lifted.push_back(g.lifted);
  EXPECT_EQ(lifted, parse_polynomial_list("x, y", R));
  EXPECT_EQ(report.generators[0].nilpotency, 2u);
  EXPECT_EQ(report.generators[1].nilpotency, 1u);
}

TEST(Sandwich, WholeRing) {
  const auto R = support::ring("qplane_m1");
  const auto C = center_generators(R);
  PointIdealCache cache(R);
  const auto I = two_sided_saturate(parse_polynomial_list("x-1, y-1", R));
  const auto report = verify_sandwich(I, C, SearchDomain::integer_grid(R->field(), 2, -1, 1), 2, 2, cache);
  EXPECT_TRUE(report.center_points.empty());
  ASSERT_EQ(report.generators.size(), 1u);
  EXPECT_EQ(report.generators[0].lifted, R->one());
  EXPECT_EQ(report.generators[0].nilpotency, 1u);
  EXPECT_EQ(report.first_inclusion, Verdict::Confirmed);
  EXPECT_EQ(report.second_inclusion, Verdict::Confirmed);
}

TEST(NullstellensatzProperties, CenterGeneratorsCommute) {
  for (const char* name : {"qplane_m1", "qplane_zeta3", "qplane_zeta4", "qplane_q2_gf5", "commutative"}) {
    const auto R = support::ring(name);
    const auto C = center_generators(R);
    for (const auto& g : C.generators)
      for (std::size_t j = 0; j < R->size(); ++j) ASSERT_EQ(g * R->variable(j), R->variable(j) * g) << name;
  }
}

TEST(NullstellensatzProperties, SandwichNeverConfirmsWithoutCertificates) {
  std::mt19937_64 rng(63);
  for (const char* name : {"qplane_m1", "commutative"}) {
    const auto R = support::ring(name);
    const auto C = center_generators(R);
    PointIdealCache cache(R);
    for (int k = 0; k < 6; ++k) {
      const auto I = two_sided_saturate({R->variable(k % 2).pow(2 + k % 3) + random_polynomial(R, rng, 1, 1)});
      if (I.status == IdealStatus::Unknown) continue;
      const auto report = verify_sandwich(I, C, SearchDomain::integer_grid(R->field(), 2, -1, 1), 4, 4, cache);
      if (report.first_inclusion == Verdict::Confirmed) {
        ASSERT_FALSE(report.generators.empty());
        for (const auto& g : report.generators) ASSERT_TRUE(g.nilpotency);
      }
      if (report.second_inclusion == Verdict::Confirmed)
        for (const auto& g : report.generators)
          if (g.nilpotency) ASSERT_TRUE(g.vanishes_on_V);
      ASSERT_NE(report.second_inclusion, Verdict::Refuted) << name;
    }
  }
}
