#pragma once

// Points, roots and vanishing sets over finite search domains, ideals of
// points by truncated linear algebra, algebraic-set witnesses and the
// complete-semiprimeness probe for point ideals.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/groebner.hpp"

namespace skewpbw {

using Point = std::vector<Scalar>;

std::string point_string(const Point& z);

/// Finite candidate set for vanishing sets: a product of per-coordinate
/// scalar lists, or all of GF(p)^n.
struct SearchDomain {
  enum class Kind { Grid, FullPrimeField };
  Kind kind = Kind::Grid;
  std::vector<std::vector<Scalar>> axes;

  static SearchDomain grid(std::vector<std::vector<Scalar>> axes);
  /// Every coordinate ranges over lo..hi.
  static SearchDomain integer_grid(const Field& field, std::size_t n, long lo, long hi);
  static SearchDomain full_prime_field(const Field& field, std::size_t n);

  std::size_t dimension() const { return axes.size(); }
  std::size_t size() const;
  /// Points in lexicographic order of axis positions.
  std::vector<Point> points() const;
};

/// "grid:-2..2" (every axis), "grid:0,1;0,1,2" (per axis, ';'-separated,
/// entries in the scalar grammar or a..b ranges) or "gf".
SearchDomain parse_domain(std::string_view text, const Field& field, std::size_t n);

/// The two-sided ideal <x_1 - z_1, ..., x_n - z_n>, saturated.
struct PointIdeal {
  Point point;
  IdealHandle handle;

  bool degenerate() const { return handle.status == IdealStatus::ImproperUnit; }
};

/// Memoizes point ideals for one ring and budget. Thread-safe.
class PointIdealCache {
 public:
  explicit PointIdealCache(RingPtr ring, Budget budget = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const Budget& budget() const noexcept { return budget_; }

  std::shared_ptr<const PointIdeal> get(const Point& z);

 private:
  struct PointLess {
    bool operator()(const Point& a, const Point& b) const;
  };
  RingPtr ring_;
  Budget budget_;
  std::mutex mutex_;
  std::map<Point, std::shared_ptr<const PointIdeal>, PointLess> cache_;
};

PointIdeal point_ideal(const RingPtr& ring, const Point& z, const Budget& budget = {});

/// Z is a root of f iff f lies in <Z>; every f vanishes at a degenerate Z.
Membership is_root(const Polynomial& f, const Point& z, PointIdealCache& cache);
Membership is_root(const Polynomial& f, const Point& z, const Budget& budget = {});

enum class PointStatus { Root, NonRoot, Degenerate, Unknown };
std::string to_string(PointStatus s);

struct VanishingEntry {
  Point point;
  PointStatus status;
};

struct VanishingResult {
  std::vector<VanishingEntry> table;  ///< every domain point, in domain order
  std::vector<Point> points;          ///< members of V(S), degenerate ones included
  std::vector<Point> degenerate;      ///< members with <Z> = A
  std::vector<Point> unknown;
};

/// V(S) restricted to the domain, testing the generators only.
VanishingResult vanishing_set(const std::vector<Polynomial>& S, const SearchDomain& domain,
                              PointIdealCache& cache);

/// Basis of I(X) in degrees <= d: the common kernel of the normal-form maps
/// modulo each <Z>. Rows are in reduced echelon form (distinct leading
/// monomials, monic). Throws InvalidArgument if a point ideal is Unknown.
std::vector<Polynomial> ideal_of_points(const std::vector<Point>& X, std::uint32_t d, PointIdealCache& cache);

/// Reduced echelon basis of the span of `fs` (all of degree <= d).
std::vector<Polynomial> span_basis(const RingPtr& ring, const std::vector<Polynomial>& fs);

struct WitnessResult {
  std::optional<Polynomial> witness;  ///< nonzero g with X inside V(g)
  bool verified = false;              ///< is_root(g, Z) = yes for every Z in X
  std::string diagnostic;
};

/// Intersects the left ideals A f_Z, f_Z = sum_k (x_k - z_k), over Z in X
/// and returns a nonzero element of smallest leading monomial.
WitnessResult algebraic_witness(const std::vector<Point>& X, PointIdealCache& cache);

struct SemiprimeReport {
  Point point;
  IdealStatus ideal_status = IdealStatus::Unknown;
  std::size_t samples = 0;
  std::size_t members = 0;      ///< sampled f lying in <Z>
  std::size_t consistent = 0;   ///< (f^2 in <Z>) == (f in <Z>)
  std::size_t unknown = 0;
  std::vector<Polynomial> counterexamples;

  bool passed() const { return counterexamples.empty() && unknown == 0; }
};

/// Samples f of degree <= max_degree (half of them forced into <Z> by
/// subtracting their normal form) and checks f^2 in <Z> <=> f in <Z>.
/// Requires a quasi-commutative presentation.
SemiprimeReport semiprime_probe(const Point& z, std::size_t samples, std::uint32_t max_degree, std::mt19937_64& rng,
                                PointIdealCache& cache);

struct HypersurfaceTags {
  bool hypersurface = false;
  bool plane_curve = false;
  bool hyperplane = false;
  bool line = false;
  std::string diagnostic;

  std::vector<std::string> names() const;
};

HypersurfaceTags classify_hypersurface(const Polynomial& f);

/// Random point with coordinates from Field::random.
Point random_point(const Field& field, std::size_t n, std::mt19937_64& rng, int bound = 3);

}  // namespace skewpbw
