#pragma once

// Power search for radical membership in commutative rings: f in sqrt(J)
// iff f^m in J for some m; searched for m <= 6 with Groebner membership.
// Instances are built so that members need m <= a + b - 1 <= 5.

#include <random>
#include <string>
#include <vector>

#include "skewpbw/groebner.hpp"

namespace radical_oracle {

using namespace skewpbw;

inline constexpr unsigned kMaxPower = 6;

/// Smallest m <= kMaxPower with f^m in J, or 0.
inline unsigned power_search(const Polynomial& f, const std::vector<Polynomial>& J) {
  const IdealHandle h = left_groebner(J);
  if (h.status == IdealStatus::Unknown) return 0;
  Polynomial p = f;
  for (unsigned m = 1; m <= kMaxPower; ++m) {
    if (is_member_left(p, h) == Membership::Yes) return m;
    p = p * f;
  }
  return 0;
}

struct Instance {
  std::vector<Polynomial> J;
  Polynomial f;
  std::string family;
};

inline Polynomial linear_form(const RingPtr& R, std::mt19937_64& rng) {
  while (true) {
    Polynomial l = R->field().random(rng, 3) * R->variable(0) + R->field().random(rng, 3) * R->variable(1) +
                   R->constant(R->field().random(rng, 3));
    if (l.degree() == 1) return l;
  }
}

inline Instance random_instance(const RingPtr& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> family(0, 4), exp(1, 3);
  const Polynomial l1 = linear_form(R, rng), l2 = linear_form(R, rng);
  const Polynomial noise = random_polynomial(R, rng, 2, 3);
  Instance in{{}, R->zero(), ""};
  switch (family(rng)) {
    case 0: {  // <l1^a, l2^b>, f = c1 l1 + c2 l2 (+ noise)
      in.family = "powers";
      in.J = {l1.pow(exp(rng)), l2.pow(exp(rng))};
      in.f = R->field().random(rng, 3) * l1 + R->field().random(rng, 3) * l2;
      if (rng() % 2) in.f += noise;
      break;
    }
    case 1: {  // <l1^a h>, f = l1 h or l1 + h
      in.family = "principal";
      const Polynomial h = linear_form(R, rng);
      const int a = std::uniform_int_distribution<int>(1, 2)(rng);
      in.J = {l1.pow(a) * h};
      in.f = rng() % 2 ? l1 * h : l1 + h;
      break;
    }
    case 2: {  // <l1^a l2^b>, f = l1 l2 or l1
      in.family = "product";
      const int a = std::uniform_int_distribution<int>(1, 2)(rng);
      in.J = {l1.pow(a) * l2};
      in.f = rng() % 2 ? l1 * l2 : l1;
      break;
    }
    case 3: {  // two random generators of degree <= 3
      in.family = "random";
      in.J = {random_polynomial(R, rng, 3, 3), random_polynomial(R, rng, 3, 3)};
      if (in.J[0].is_zero()) in.J[0] = l1;
      if (in.J[1].is_zero()) in.J[1] = l2;
      in.f = noise;
      break;
    }
    default: {  // <l1^a, l1 l2>, f = l1 or l2
      in.family = "embedded";
      in.J = {l1.pow(exp(rng)), l1 * l2};
      in.f = rng() % 2 ? l1 : l2;
      break;
    }
  }
  return in;
}

}  // namespace radical_oracle
