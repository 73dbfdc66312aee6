#pragma once

// Skew PBW extensions A = sigma(F)<x_1, ..., x_n> given by relation
// constants:  x_j x_i = c_ij x_i x_j + sum_k a_ij^(k) x_k + d_ij  (i < j),
// and  x_i r = sigma_i(r) x_i  for scalars r.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/scalar.hpp"

namespace skewpbw {

/// Constants of the rewriting rule for one pair i < j.
struct Relation {
  Scalar c;                    ///< c_ij, nonzero
  std::vector<Scalar> linear;  ///< a_ij^(k), k = 0..n-1
  Scalar constant;             ///< d_ij

  bool has_lower_terms() const;
};

class Presentation {
 public:
  /// The commutative polynomial ring F[names...] (all c_ij = 1, sigma = id).
  Presentation(const Field& field, std::vector<std::string> names);

  const Field& field() const noexcept { return *field_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const AutomorphismSpec& sigma(std::size_t i) const { return sigma_.at(i); }
  /// True when sigma_i fixes every scalar.
  bool sigma_trivial(std::size_t i) const { return sigma_trivial_.at(i); }
  bool all_sigma_trivial() const noexcept;

  /// Relation for the pair i < j.
  const Relation& relation(std::size_t i, std::size_t j) const;

  /// Replaces sigma_i; throws InvalidPresentation if it is not an
  /// automorphism of the field.
  void set_sigma(std::size_t i, const AutomorphismSpec& sigma);
  /// Replaces the relation for i < j; throws InvalidPresentation when
  /// c_ij = 0 or a scalar lives in another field.
  void set_relation(std::size_t i, std::size_t j, Relation relation);
  /// Shorthand for x_j x_i = c x_i x_j.
  void set_commutation(std::size_t i, std::size_t j, const Scalar& c);

  /// Copy with `name` prepended as a new central variable x_0 (commutes with
  /// every variable and every scalar).
  Presentation with_central_front(const std::string& name) const;

  /// Document form accepted by parse_presentation; load(serialize(P)) == P.
  std::string serialize() const;
  /// Stable 64-bit FNV-1a digest of serialize(), as 16 hex digits.
  std::string digest() const;

  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  const Field* field_;
  std::vector<std::string> names_;
  std::vector<AutomorphismSpec> sigma_;
  std::vector<bool> sigma_trivial_;
  std::vector<Relation> relations_;  // pair (i<j) at j*(j-1)/2 + i
};

struct ClassificationFlags {
  bool quasi_commutative = false;
  bool bijective = false;
};

ClassificationFlags classify(const Presentation& presentation);

/// Parses a presentation document:
///
///   field: Q | Q(i) | cyclotomic:m | gf:p
///   vars: x, y, z
///   sigma: x=conj, y=id            (optional, default identity)
///   relations:
///     y*x = 2*x*y
///     z*x = x*z - x
///
/// Pairs without a relation line commute. Lines starting with '#' are
/// comments.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

}  // namespace skewpbw
