#pragma once

// Randomized checks of the inclusions between vanishing sets V(.) and ideals
// of points I(.) over a finite search domain. Shared by the geometry tests
// and the acceptance binary.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "skewpbw/geometry.hpp"

namespace incidence {

using namespace skewpbw;

struct Tally {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  // first few only

  void check(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    ++violations;
    if (failures.size() < 10) failures.push_back(what);
  }
};

inline bool same_point(const Point& a, const Point& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

inline bool contains(const std::vector<Point>& set, const Point& z) {
  return std::any_of(set.begin(), set.end(), [&](const Point& p) { return same_point(p, z); });
}

inline bool subset(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Point& z) { return contains(b, z); });
}

inline std::vector<Point> random_subset(const std::vector<Point>& all, std::size_t max_size, std::mt19937_64& rng) {
  std::vector<Point> pool = all;
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  pool.resize(std::min(k, pool.size()));
  return pool;
}

/// A random element of I(X) of degree <= d (random when I(X)_{<=d} = 0).
inline Polynomial vanishing_on(const std::vector<Point>& X, std::uint32_t d, PointIdealCache& cache,
                               std::mt19937_64& rng) {
  const RingPtr& ring = cache.ring();
  const auto basis = ideal_of_points(X, d, cache);
  Polynomial f = ring->zero();
  for (const auto& b : basis) f += ring->field().random(rng, 3) * b;
  return f.is_zero() ? random_polynomial(ring, rng, d, 3) : f;
}

inline bool span_subset(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& f) { return oracle::in_span(b, f); });
}

inline std::size_t dim(const std::vector<Polynomial>& fs) {
  std::vector<std::map<Exponent, Scalar>> rows;
  for (const auto& f : fs) {
    std::map<Exponent, Scalar> r;
    for (const auto& t : f.terms()) r.emplace(t.exponent, t.coefficient);
    rows.push_back(std::move(r));
  }
  return oracle::rank(std::move(rows));
}

/// Runs `rounds` rounds of the ten checks below.
inline Tally run(PointIdealCache& cache, const SearchDomain& domain, std::size_t rounds, std::uint32_t d,
                 std::mt19937_64& rng) {
  Tally t;
  const RingPtr& ring = cache.ring();
  const auto all = domain.points();
  auto V = [&](const std::vector<Polynomial>& S) { return vanishing_set(S, domain, cache).points; };
  auto root = [&](const Polynomial& f, const Point& z) { return is_root(f, z, cache) == Membership::Yes; };

  for (std::size_t r = 0; r < rounds; ++r) {
    const auto X = random_subset(all, 4, rng), Y = random_subset(all, 4, rng);
    const Polynomial f = vanishing_on(X, d, cache, rng), g = vanishing_on(X, d, cache, rng);
    const Polynomial a = random_polynomial(ring, rng, 1, 2), b = random_polynomial(ring, rng, 1, 2);

    // (i)(a) roots of f and g are roots of f + g.
    {
      const Point& z = X.front();
      const bool premise = root(f, z) && root(g, z);
      t.check(!premise || root(f + g, z), "(i)(a) at " + point_string(z));
    }
    // (i)(b) V(f) inside V(a f b).
    t.check(subset(V({f}), V({a * f * b})), "(i)(b) f=" + f.to_string());
    // (iii)(c) S in T gives V(T) inside V(S).
    t.check(subset(V({f, g}), V({f})), "(iii)(c) f=" + f.to_string());
    // (iii)(f) V(S1 + S2) = V(S1) cap V(S2).
    {
      const Polynomial h = vanishing_on(Y, d, cache, rng);
      const auto both = V({f, h});
      std::vector<Point> meet;
      const auto vh = V({h});
      for (const auto& z : V({f}))
        if (contains(vh, z)) meet.push_back(z);
      t.check(subset(both, meet) && subset(meet, both), "(iii)(f)");
    }
    // (iv)(b) X inside X cup Y gives I(X cup Y) inside I(X).
    std::vector<Point> XY = X;
    for (const auto& z : Y)
      if (!contains(XY, z)) XY.push_back(z);
    const auto IX = ideal_of_points(X, d, cache), IY = ideal_of_points(Y, d, cache),
               IXY = ideal_of_points(XY, d, cache);
    t.check(span_subset(IXY, IX), "(iv)(b)");
    // (iv)(c) generators of S vanish on V(S): S inside I(V(S)).
    {
      const auto vs = V({f, g});
      const auto I = ideal_of_points(vs, d, cache);
      t.check(oracle::in_span(I, f) && oracle::in_span(I, g), "(iv)(c)");
    }
    // (iv)(d) X inside V(I(X)).
    const auto VIX = V(IX);
    t.check(subset(X, VIX), "(iv)(d)");
    // (iv)(f) I(V(I(X))) = I(X) in degrees <= d.
    {
      const auto back = ideal_of_points(VIX, d, cache);
      t.check(span_subset(back, IX) && span_subset(IX, back), "(iv)(f)");
    }
    // (iv)(g) I(X cup Y) = I(X) cap I(Y) as spaces.
    {
      std::vector<Polynomial> sum = IX;
      sum.insert(sum.end(), IY.begin(), IY.end());
      const std::size_t meet = dim(IX) + dim(IY) - dim(sum);
      t.check(span_subset(IXY, IX) && span_subset(IXY, IY) && dim(IXY) == meet, "(iv)(g)");
    }
    // (iv)(h) I({Z}) = <Z> in degrees <= d: left multiples of the saturated
    // basis span the same space as the normal-form kernel.
    {
      const Point& z = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      const auto pi = cache.get(z);
      std::vector<Polynomial> gens;
      for (const auto& e : pi->handle.basis.elements) gens.push_back(e.in_ring(ring));
      const auto truncated = oracle::left_multiples(gens, d);
      const auto kernel = ideal_of_points({z}, d, cache);
      t.check(span_subset(truncated, kernel) && span_subset(kernel, truncated), "(iv)(h) at " + point_string(z));
    }
  }
  return t;
}

}  // namespace incidence
