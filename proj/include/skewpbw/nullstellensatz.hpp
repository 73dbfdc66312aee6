#pragma once

// Centers of quantum affine spaces, contraction of ideals to the center,
// radical membership in the (commutative) center and the check of
//   <I_Z(V_Z(J))>  subset  sqrt(I)  subset  I(V(I)),   J = I cap Z(A).

#include <optional>
#include <string>
#include <vector>

#include "skewpbw/geometry.hpp"

namespace skewpbw {

struct CenterDescription {
  RingPtr ring;                       ///< the algebra A
  RingPtr center_ring;                ///< commutative F[u_1, ..., u_n], u_i = x_i^L_i
  std::vector<std::uint32_t> exponents;  ///< L_i
  std::vector<Polynomial> generators;    ///< x_i^L_i in A
  /// Every generator commutes with every x_j (exact products compared).
  bool verified = false;
  /// No other central monomial exists below the generators, so Z(A) is the
  /// polynomial ring in the generators.
  bool polynomial_ring = false;
  std::string notes;

  /// u^k -> x^(L k).
  Polynomial lift(const Polynomial& central) const;
};

/// For quasi-commutative presentations with identity sigma and every c_ij a
/// root of unity of order d_ij: L_i = lcm_j d_ij. Throws Unsupported when the
/// pattern does not apply or the center is not the polynomial ring in the
/// x_i^L_i; throws Error if a centrality check fails.
CenterDescription center_generators(const RingPtr& ring);

/// Multiplicative order of a root of unity, or nullopt.
std::optional<std::uint64_t> root_of_unity_order(const Scalar& c);

/// Names u, v, w (n <= 3) or u1, ..., un.
std::vector<std::string> center_variable_names(std::size_t n);

struct Contraction {
  std::vector<Polynomial> central;  ///< basis of J in degrees <= d, in u-variables
  std::vector<Polynomial> lifted;   ///< the same elements in A
};

/// J_{<= d} = I_{<= d} cap span(central monomials), d measured in A.
Contraction contract_to_center(const IdealHandle& I, const CenterDescription& C, std::uint32_t d);

/// f in sqrt(J) for a commutative ring, by 1 in J + <1 - t f>.
Membership radical_membership_commutative(const Polynomial& f, const std::vector<Polynomial>& J,
                                          const Budget& budget = {});

/// Generators of the ideal of the finite point set V in a commutative ring
/// (reduced basis); {1} for the empty set.
std::vector<Polynomial> commutative_points_ideal(const RingPtr& ring, const std::vector<Point>& V,
                                                 const Budget& budget = {});

/// f evaluated at p in a commutative ring.
Scalar evaluate_commutative(const Polynomial& f, const Point& p);

struct NilpotencyResult {
  std::optional<unsigned> exponent;  ///< smallest m <= M with w^m in I
  bool unknown = false;              ///< some membership test was Unknown
};

/// Requires w central (checked); 0 has exponent 1.
NilpotencyResult central_nilpotency(const Polynomial& w, const IdealHandle& I, unsigned max_exponent);

enum class Verdict { Confirmed, Refuted, Inconclusive };
std::string to_string(Verdict v);

struct SandwichGenerator {
  Polynomial central;  ///< g in u-variables
  Polynomial lifted;   ///< g in A
  Membership in_radical_of_J = Membership::Unknown;
  std::optional<unsigned> nilpotency;  ///< certifies lifted in sqrt(I)
  bool vanishes_on_V = false;          ///< root at every found point of V(I)
  std::optional<Point> counterexample;  ///< a point of V(I) where it does not vanish
  std::string note;
};

struct SandwichReport {
  Contraction J;
  std::vector<Point> center_points;  ///< V_Z(J) on the domain (center coordinates)
  std::vector<SandwichGenerator> generators;  ///< certified generators of I_Z(V_Z(J))
  /// Generators of the grid-trace ideal that are not in sqrt(J): they vanish
  /// on the grid points only, not on V_Z(J).
  std::vector<Polynomial> grid_artifacts;
  VanishingResult variety;  ///< V(I) on the domain
  Verdict first_inclusion = Verdict::Inconclusive;
  Verdict second_inclusion = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

/// Runs the pipeline: contraction, central zeros, ideal of those points
/// (cross-checked by radical membership), nilpotency certificates, and root
/// checks on V(I). The domain is used both in center and in A coordinates.
SandwichReport verify_sandwich(const IdealHandle& I, const CenterDescription& C, const SearchDomain& domain,
                               std::uint32_t d, unsigned max_exponent, PointIdealCache& cache);

}  // namespace skewpbw
