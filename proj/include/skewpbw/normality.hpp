#pragma once

// Central and normal elements. f is normal when A f = f A; since A is
// generated as a ring by the x_j and a field generator over the prime field,
// it suffices that x_j f, r f lie in f A and f x_j, f r lie in A f.

#include <optional>
#include <string>
#include <vector>

#include "skewpbw/groebner.hpp"

namespace skewpbw {

/// f x_j = x_j f for every j, and f r = r f for the field generator r when
/// some sigma_i is not the identity.
bool central_probe(const Polynomial& f);

enum class NormalStatus { Normal, NotNormal, Unknown };
std::string to_string(NormalStatus s);

/// One solved (or failed) equation of the generator test.
struct NormalWitness {
  /// "left":  g with f g = a f   (a f in f A)
  /// "right": g with g f = f a   (f a in A f)
  std::string direction;
  std::string generator;       ///< name of a: a variable or the field generator
  std::optional<Polynomial> g;  ///< absent when the bounded solve is infeasible
};

struct NormalityVerdict {
  NormalStatus status = NormalStatus::Unknown;
  std::vector<NormalWitness> witnesses;
  std::optional<NormalWitness> counter_witness;
  /// "structure" for normal_from_parts, "generator-solve" for is_normal.
  std::string certificate;
  std::string diagnostic;
};

struct NormalElement {
  Polynomial f;
  NormalityVerdict verdict;
};

/// f = c x^alpha h with h central; requires a quasi-commutative
/// presentation. Throws InvalidArgument when h is not central.
NormalElement normal_from_parts(const RingPtr& ring, const Scalar& c, const Exponent& alpha, const Polynomial& h);

/// Solves f g = a f and g' f = f a for each ring generator a with g, g' of
/// degree <= deg(a) + slack (deg(a) = 1 for variables, 0 for scalars); the
/// solve is linear over the prime subfield, so sigma-semilinearity is exact.
/// An infeasible system is a certificate of non-normality because degrees
/// add in these domains.
NormalityVerdict is_normal(const Polynomial& f, unsigned slack = 0);

}  // namespace skewpbw
