#pragma once

// Left division, left Groebner bases by Buchberger completion, two-sided
// saturation and left-ideal intersection.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/polynomial.hpp"

namespace skewpbw {

struct Budget {
  /// S-elements and right multiples above this total degree are not formed;
  /// meeting one makes the result Unknown.
  std::uint32_t max_degree = 12;
  std::size_t max_pairs = 100000;
  std::size_t max_rounds = 50;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// f = sum q_i f_i + h with no term of h divisible by any lm(f_i). Uses the
/// order of f's ring unless `order` is given; the result lives in that ring.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const std::optional<MonomialOrder>& order = std::nullopt);

/// Remainder of divide() without the quotients.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

enum class IdealStatus { Proper, ImproperUnit, Unknown };
enum class Sidedness { Left, TwoSided };

std::string to_string(IdealStatus status);
std::string to_string(Sidedness sidedness);

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;  ///< monic, sorted descending by lm
  bool reduced = false;
  /// When requested for left bases: elements[k] = sum_j cofactors[k][j] *
  /// generators[j].
  std::optional<std::vector<std::vector<Polynomial>>> cofactors;
};

struct IdealHandle {
  std::vector<Polynomial> generators;
  Sidedness sidedness = Sidedness::Left;
  IdealStatus status = IdealStatus::Unknown;
  /// The basis when Proper; the partial basis reached when Unknown; {1}
  /// when ImproperUnit.
  GroebnerBasis basis;
  /// Why the status is Unknown, or how the unit was found.
  std::string diagnostic;
  std::size_t pairs_processed = 0;
  std::size_t rounds = 0;

  const RingPtr& ring() const { return basis.ring; }
};

/// Left Groebner basis of the left ideal generated by `gens` (nonempty).
IdealHandle left_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                          const Budget& budget = {}, bool certificates = false);
IdealHandle left_groebner(const std::vector<Polynomial>& gens, const Budget& budget = {}, bool certificates = false);

enum class Membership { Yes, No, Unknown };
std::string to_string(Membership m);

/// Left-ideal membership by reduction against the basis (for a two-sided
/// handle this is two-sided membership, as its left ideal is two-sided).
Membership is_member_left(const Polynomial& f, const IdealHandle& ideal);

/// Normal form of f modulo a resolved ideal (zero for ImproperUnit); linear
/// in f. Throws InvalidArgument for Unknown handles.
Polynomial normal_form(const Polynomial& f, const IdealHandle& ideal);

/// Left basis of the two-sided ideal generated by `gens`: left completion
/// alternated with closure under right multiplication by the variables (and
/// by the field generator when some sigma_i is not the identity).
IdealHandle two_sided_saturate(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                               const Budget& budget = {});
IdealHandle two_sided_saturate(const std::vector<Polynomial>& gens, const Budget& budget = {});

struct IntersectionResult {
  std::vector<Polynomial> generators;
  /// False when the elimination basis hit the budget; the generators are
  /// still members of both ideals.
  bool complete = true;
};

/// Generators of I cap J for left ideals, via a central variable t:
/// the t-free part of a left basis of A[t] t I + A[t] (1 - t) J under a block
/// order with t in front.
IntersectionResult intersect_left(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                                  const Budget& budget = {});
IntersectionResult intersect_left(const IdealHandle& I, const IdealHandle& J, const Budget& budget = {});

/// The ring of `ring`'s algebra with a new central variable prepended and a
/// block order eliminating it.
RingPtr central_extension(const RingPtr& ring, const std::string& name = "t");
/// f viewed in the extension (exponent 0 on the new variable).
Polynomial lift_to_extension(const Polynomial& f, const RingPtr& extension);
/// Drops the front variable; throws InvalidArgument when f involves it.
Polynomial drop_front_variable(const Polynomial& f, const RingPtr& base);

/// JSON document: presentation digest, order, sidedness, status, elements and
/// (if present) certificates.
std::string serialize_ideal(const IdealHandle& ideal);

/// "deglex" | "degrevlex" | "block:v1,v2,..." (variable names).
std::string order_to_string(const MonomialOrder& order, const std::vector<std::string>& names);
MonomialOrder parse_order(std::string_view text, const std::vector<std::string>& names);

}  // namespace skewpbw
