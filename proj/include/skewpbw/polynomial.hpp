#pragma once

// Normal-ordered arithmetic in a skew PBW extension. Products of standard
// monomials are computed by rewriting adjacent inversions x_j x_i (j > i)
// with the presentation's relations and passing scalars to the left through
// the sigma_i; results are memoized per algebra.

#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewpbw/monomial.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/scalar.hpp"

namespace skewpbw {

struct Term {
  Exponent exponent;
  Scalar coefficient;
};

using TermVector = std::vector<Term>;

/// A presentation together with its product caches. Independent of the
/// monomial order; shared by every Ring built on it. Thread-safe.
class Algebra {
 public:
  explicit Algebra(Presentation presentation);

  const Presentation& presentation() const noexcept { return presentation_; }
  const Field& field() const noexcept { return presentation_.field(); }
  std::size_t size() const noexcept { return presentation_.size(); }

  /// sigma^alpha(r) = sigma_1^a_1(...sigma_n^a_n(r)).
  Scalar twist(const Exponent& alpha, const Scalar& r) const;

  /// Normal form of x_k * x^beta.
  std::shared_ptr<const TermVector> variable_times(std::size_t k, const Exponent& beta) const;
  /// Normal form of x^alpha * x^beta.
  std::shared_ptr<const TermVector> monomial_product(const Exponent& alpha, const Exponent& beta) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Exponent, Exponent>& p) const noexcept {
      return p.first.hash() * 1000003u ^ p.second.hash();
    }
  };
  struct VarHash {
    std::size_t operator()(const std::pair<std::size_t, Exponent>& p) const noexcept {
      return p.second.hash() * 31u + p.first;
    }
  };

  Presentation presentation_;
  std::vector<bool> trivial_sigma_;
  bool all_trivial_ = true;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::pair<std::size_t, Exponent>, std::shared_ptr<const TermVector>, VarHash> var_cache_;
  mutable std::unordered_map<std::pair<Exponent, Exponent>, std::shared_ptr<const TermVector>, PairHash> mono_cache_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
class Polynomial;

/// An algebra with a fixed monomial order. Polynomials refer to their ring.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  /// Throws InvalidArgument if the order is not compatible with the
  /// relations (a lower-order term of some x_j x_i would not be smaller than
  /// x_i x_j).
  static RingPtr create(Presentation presentation, MonomialOrder order = MonomialOrder::deglex());
  static RingPtr create(std::shared_ptr<const Algebra> algebra, MonomialOrder order = MonomialOrder::deglex());

  RingPtr with_order(const MonomialOrder& order) const;

  const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const Presentation& presentation() const noexcept { return algebra_->presentation(); }
  const Field& field() const noexcept { return algebra_->field(); }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return algebra_->size(); }

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const Scalar& c) const;
  Polynomial constant(long c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(const Exponent& alpha) const;
  Polynomial term(const Scalar& c, const Exponent& alpha) const;

  /// Monomials of total degree <= d, sorted descending by order().
  std::vector<Exponent> monomials_up_to(std::uint32_t d) const;

 private:
  Ring(std::shared_ptr<const Algebra> algebra, MonomialOrder order)
      : algebra_(std::move(algebra)), order_(std::move(order)) {}

  std::shared_ptr<const Algebra> algebra_;
  MonomialOrder order_;
};

/// An element of a Ring: nonzero terms sorted strictly descending by the
/// ring's order, so the leading term is terms().front().
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Terms may come in any order and repeat; they are merged and sorted.
  Polynomial(RingPtr ring, TermVector terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermVector& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero or a nonzero scalar.
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  int degree() const noexcept;

  const Exponent& leading_exponent() const;
  const Scalar& leading_coefficient() const;
  const Term& leading_term() const;
  Scalar coefficient(const Exponent& alpha) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  /// Ring product (normal-ordered).
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// r * f (scalar on the left).
  friend Polynomial operator*(const Scalar& r, const Polynomial& f);
  /// f * r = sum c sigma^alpha(r) x^alpha.
  Polynomial times_scalar_right(const Scalar& r) const;
  Polynomial pow(unsigned exponent) const;

  /// f / lc(f); zero stays zero.
  Polynomial monic() const;
  /// Same element in another ring over the same algebra (re-sorted).
  Polynomial in_ring(const RingPtr& other) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void normalize();

  RingPtr ring_;
  TermVector terms_;
};

// ---------------------------------------------------------------- operations

struct LeadingData {
  bool zero = true;  ///< the lm(0) := 0 sentinel
  Exponent monomial;
  Scalar coefficient;
};

/// lm, lc of f under an arbitrary order (O(1) when it is f's ring order).
LeadingData leading_data(const MonomialOrder& order, const Polynomial& f);

struct ScalarCommutation {
  Scalar twisted;      ///< r_alpha = sigma^alpha(r)
  Polynomial remainder;  ///< p_{alpha,r}; zero since delta vanishes on F
};

/// x^alpha r = r_alpha x^alpha + p_{alpha,r}.
ScalarCommutation commute_scalar(const RingPtr& ring, const Exponent& alpha, const Scalar& r);

struct MonomialProduct {
  Scalar coefficient;    ///< c_{alpha,beta}
  Polynomial remainder;  ///< p_{alpha,beta}, of degree < |alpha + beta|
};

/// x^alpha x^beta = c_{alpha,beta} x^{alpha+beta} + p_{alpha,beta}.
MonomialProduct monomial_product(const RingPtr& ring, const Exponent& alpha, const Exponent& beta);

inline Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

/// Result of the overlap check on the relations.
struct ConsistencyReport {
  bool consistent = true;
  /// Description of the first failing overlap, e.g. "(z*y)*x != z*(y*x)".
  std::string failure;
  std::vector<std::size_t> failing_triple;
  std::optional<Polynomial> left_association;
  std::optional<Polynomial> right_association;
  std::size_t checked = 0;
};

/// Verifies (x_k x_j) x_i == x_k (x_j x_i) for all i < j < k, associativity
/// of monomial triples of total degree <= degree_bound, and the
/// compatibility of the sigma twists with the relations.
ConsistencyReport check_pbw_consistency(const Presentation& presentation, unsigned degree_bound = 4);

/// Sum of up to `terms` random terms of degree <= max_degree (possibly
/// fewer after cancellation); coefficients from Field::random.
Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t max_degree, std::size_t terms,
                             int coefficient_bound = 5);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace skewpbw
