#pragma once

// Exact coefficient fields: Q, Q(i), Q(zeta_m) and GF(p), plus the field
// automorphisms used as the sigma_i of a presentation.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "skewpbw/error.hpp"

namespace skewpbw {

enum class FieldKind { Rationals, GaussianRationals, Cyclotomic, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  /// m for Cyclotomic, p for PrimeField, unused otherwise.
  std::uint64_t parameter = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec gaussian() { return {FieldKind::GaussianRationals, 0}; }
  static FieldSpec cyclotomic(std::uint64_t m) { return {FieldKind::Cyclotomic, m}; }
  static FieldSpec prime(std::uint64_t p) { return {FieldKind::PrimeField, p}; }

  /// "Q" | "Q(i)" | "cyclotomic:m" | "gf:p"
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;
};

class Scalar;

/// An interned, immutable field context. Obtain one with make_field(); two
/// contexts are the same field iff they are the same object.
class Field {
 public:
  const FieldSpec& spec() const noexcept { return spec_; }

  /// Dimension over the prime field (phi(m) for cyclotomic fields, 2 for
  /// Q(i), 1 otherwise).
  std::size_t degree() const noexcept { return degree_; }
  /// Order of the designated root of unity: m for Cyclotomic(m), 4 for Q(i),
  /// 1 for Q. Zero for prime fields.
  std::uint64_t root_order() const noexcept { return root_order_; }
  std::uint64_t characteristic() const noexcept {
    return spec_.kind == FieldKind::PrimeField ? spec_.parameter : 0;
  }
  bool is_prime_field() const noexcept {
    return spec_.kind == FieldKind::Rationals || spec_.kind == FieldKind::PrimeField;
  }
  /// Q for the characteristic-zero fields, the field itself for GF(p).
  const Field& prime_subfield() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// zeta_m (i for Q(i)); throws for prime fields.
  Scalar zeta() const;
  /// zeta^k reduced to canonical form, k taken modulo the root order.
  Scalar zeta_power(std::int64_t k) const;
  /// True when the field contains a square root of -1 through zeta.
  bool has_imaginary_unit() const noexcept;
  Scalar imaginary_unit() const;

  /// i-th power-basis element (zeta^i); 0 <= i < degree().
  Scalar basis_element(std::size_t i) const;
  /// Coordinates over prime_subfield() in the power basis.
  std::vector<Scalar> coordinates(const Scalar& a) const;

  /// Uniformly random element with small numerators/denominators
  /// (bounded by `bound`) in characteristic zero.
  Scalar random(std::mt19937_64& rng, int bound = 5) const;

  /// Coefficients of the m-th cyclotomic polynomial (low degree first).
  const std::vector<long>& cyclotomic_polynomial() const noexcept { return phi_; }

 private:
  friend const Field& make_field(const FieldSpec&);
  friend class Scalar;
  explicit Field(const FieldSpec& spec);

  FieldSpec spec_;
  std::size_t degree_ = 1;
  std::uint64_t root_order_ = 1;
  std::vector<long> phi_;
  // power_table_[e] = coordinates of zeta^e for 0 <= e < root_order_
  std::vector<std::vector<mpq_class>> power_table_;
};

/// Returns the interned field for `spec`; throws InvalidArgument when the
/// modulus is invalid (m = 0, p not prime, p >= 2^32).
const Field& make_field(const FieldSpec& spec);

/// An element of one of the supported fields, always in canonical form.
class Scalar {
 public:
  /// Zero of Q.
  Scalar();

  const Field& field() const noexcept { return *field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in the prime subfield (an integer residue or a
  /// rational number).
  bool is_rational() const noexcept;
  /// Rational value; throws unless is_rational() in characteristic zero.
  mpq_class rational_value() const;
  /// Residue in [0, p); throws outside prime fields.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::int64_t exponent) const;

  /// Equality is exact; comparing scalars of different fields throws.
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order on canonical representations, for deterministic sorting.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  friend class Field;
  explicit Scalar(const Field* field);
  void check_same_field(const Scalar& b) const;
  void reduce_prime();

  const Field* field_;
  boost::container::small_vector<mpq_class, 2> coords_;  // characteristic 0
  std::uint64_t residue_ = 0;                            // GF(p)
};

std::ostream& operator<<(std::ostream& os, const Scalar& a);

enum class AutomorphismKind { Identity, ComplexConjugation, GaloisPower, FrobeniusPower };

struct AutomorphismSpec {
  AutomorphismKind kind = AutomorphismKind::Identity;
  /// k for GaloisPower, e for FrobeniusPower.
  std::int64_t parameter = 0;

  static AutomorphismSpec identity() { return {}; }
  static AutomorphismSpec conjugation() { return {AutomorphismKind::ComplexConjugation, 0}; }
  static AutomorphismSpec galois(std::int64_t k) { return {AutomorphismKind::GaloisPower, k}; }
  static AutomorphismSpec frobenius(std::int64_t e) { return {AutomorphismKind::FrobeniusPower, e}; }

  /// "id" | "conj" | "galois:k" | "frob:e"
  static AutomorphismSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const AutomorphismSpec&) const = default;
};

/// Throws InvalidArgument when `sigma` is not an automorphism of `field`.
void validate_automorphism(const AutomorphismSpec& sigma, const Field& field);

/// True when `sigma` acts trivially on every element of `field`.
bool acts_trivially(const AutomorphismSpec& sigma, const Field& field);

/// A spec for the inverse map, valid on `field`.
AutomorphismSpec inverse_automorphism(const AutomorphismSpec& sigma, const Field& field);

Scalar apply_automorphism(const AutomorphismSpec& sigma, const Scalar& a);

}  // namespace skewpbw

template <>
struct std::hash<skewpbw::Scalar> {
  std::size_t operator()(const skewpbw::Scalar& a) const noexcept { return a.hash(); }
};
