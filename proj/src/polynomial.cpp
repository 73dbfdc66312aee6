#include "skewpbw/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "skewpbw/text.hpp"
#include "text_internal.hpp"

namespace skewpbw {

namespace {

using Accumulator = std::unordered_map<Exponent, Scalar, ExponentHash>;

void accumulate(Accumulator& acc, const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) it->second += c;
}

TermVector drain(Accumulator& acc) {
  TermVector out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.push_back(Term{e, std::move(c)});
  return out;
}

}  // namespace

// ------------------------------------------------------------------ Algebra

Algebra::Algebra(Presentation presentation) : presentation_(std::move(presentation)) {
  for (std::size_t i = 0; i < presentation_.size(); ++i) {
    trivial_sigma_.push_back(presentation_.sigma_trivial(i));
    all_trivial_ = all_trivial_ && trivial_sigma_.back();
  }
}

Scalar Algebra::twist(const Exponent& alpha, const Scalar& r) const {
  if (all_trivial_) return r;
  Scalar out = r;
  for (std::size_t i = alpha.size(); i-- > 0;) {
    if (trivial_sigma_[i]) continue;
    for (std::uint32_t k = 0; k < alpha[i]; ++k) out = apply_automorphism(presentation_.sigma(i), out);
  }
  return out;
}

std::shared_ptr<const TermVector> Algebra::variable_times(std::size_t k, const Exponent& beta) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = var_cache_.find({k, beta}); it != var_cache_.end()) return it->second;
  }
  const std::size_t n = size();
  const Field& F = field();
  std::size_t first = n;
  for (std::size_t i = 0; i < k; ++i) {
    if (beta[i] > 0) {
      first = i;
      break;
    }
  }
  TermVector result;
  if (first == n) {
    // x_k is already in position: no variable of beta precedes it.
    Exponent e = beta;
    e[k] += 1;
    result.push_back(Term{std::move(e), F.one()});
  } else {
    // x_k x_i x^rest with i < k:  x_k x_i = c x_i x_k + sum a_l x_l + d.
    const std::size_t i = first;
    Exponent rest = beta;
    rest[i] -= 1;
    const Relation& rel = presentation_.relation(i, k);
    Accumulator acc;
    const auto inner = variable_times(k, rest);
    for (const auto& t : *inner) {
      const Scalar coeff = rel.c * (trivial_sigma_[i] ? t.coefficient
                                                      : apply_automorphism(presentation_.sigma(i), t.coefficient));
      for (const auto& u : *variable_times(i, t.exponent)) accumulate(acc, u.exponent, coeff * u.coefficient);
    }
    for (std::size_t l = 0; l < n; ++l) {
      if (rel.linear[l].is_zero()) continue;
      for (const auto& u : *variable_times(l, rest)) accumulate(acc, u.exponent, rel.linear[l] * u.coefficient);
    }
    if (!rel.constant.is_zero()) accumulate(acc, rest, rel.constant);
    result = drain(acc);
  }
  auto shared = std::make_shared<const TermVector>(std::move(result));
  std::lock_guard lock(mutex_);
  return var_cache_.try_emplace({k, beta}, std::move(shared)).first->second;
}

std::shared_ptr<const TermVector> Algebra::monomial_product(const Exponent& alpha, const Exponent& beta) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = mono_cache_.find({alpha, beta}); it != mono_cache_.end()) return it->second;
  }
  TermVector result;
  std::size_t last = alpha.size();
  for (std::size_t i = alpha.size(); i-- > 0;) {
    if (alpha[i] > 0) {
      last = i;
      break;
    }
  }
  if (last == alpha.size()) {
    result.push_back(Term{beta, field().one()});
  } else {
    // x^alpha x^beta = x^(alpha - e_last) * (x_last * x^beta)
    Exponent head = alpha;
    head[last] -= 1;
    Accumulator acc;
    for (const auto& t : *variable_times(last, beta)) {
      const Scalar c = twist(head, t.coefficient);
      for (const auto& u : *monomial_product(head, t.exponent)) accumulate(acc, u.exponent, c * u.coefficient);
    }
    result = drain(acc);
  }
  auto shared = std::make_shared<const TermVector>(std::move(result));
  std::lock_guard lock(mutex_);
  return mono_cache_.try_emplace({alpha, beta}, std::move(shared)).first->second;
}

// --------------------------------------------------------------------- Ring

RingPtr Ring::create(Presentation presentation, MonomialOrder order) {
  return create(std::make_shared<const Algebra>(std::move(presentation)), std::move(order));
}

RingPtr Ring::create(std::shared_ptr<const Algebra> algebra, MonomialOrder order) {
  const Presentation& p = algebra->presentation();
  const std::size_t n = p.size();
  for (auto i : order.front())
    if (i >= n) throw InvalidArgument("block order names variable index " + std::to_string(i) + " of " + std::to_string(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = p.relation(i, j);
      Exponent top(n);
      top[i] += 1;
      top[j] += 1;
      for (std::size_t k = 0; k < n; ++k) {
        if (!r.linear[k].is_zero() && order.compare(Exponent::unit(n, k), top) >= 0)
          throw InvalidArgument("monomial order is not compatible with relation " + p.name(j) + "*" + p.name(i));
      }
    }
  }
  return RingPtr(new Ring(std::move(algebra), std::move(order)));
}

RingPtr Ring::with_order(const MonomialOrder& order) const { return create(algebra_, order); }

Polynomial Ring::zero() const { return Polynomial(shared_from_this()); }
Polynomial Ring::one() const { return constant(field().one()); }
Polynomial Ring::constant(long c) const { return constant(field().from_int(c)); }

Polynomial Ring::constant(const Scalar& c) const { return term(c, Exponent(size())); }

Polynomial Ring::variable(std::size_t i) const {
  if (i >= size()) throw InvalidArgument("variable index out of range");
  return monomial(Exponent::unit(size(), i));
}

Polynomial Ring::monomial(const Exponent& alpha) const { return term(field().one(), alpha); }

Polynomial Ring::term(const Scalar& c, const Exponent& alpha) const {
  if (alpha.size() != size()) throw InvalidArgument("exponent length does not match the ring");
  return Polynomial(shared_from_this(), TermVector{Term{alpha, c}});
}

std::vector<Exponent> Ring::monomials_up_to(std::uint32_t d) const {
  std::vector<Exponent> out;
  Exponent e(size());
  // Enumerate all exponents with |e| <= d.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == size()) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return order_.greater(a, b); });
  return out;
}

// --------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, TermVector terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (&t.coefficient.field() != &ring_->field()) throw FieldMismatch();
    if (t.exponent.size() != ring_->size()) throw InvalidArgument("exponent length does not match the ring");
  }
  normalize();
}

void Polynomial::normalize() {
  const MonomialOrder& order = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.exponent, b.exponent); });
  TermVector merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exponent.degree()));
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("the zero polynomial has no leading term");
  return terms_.front();
}
const Exponent& Polynomial::leading_exponent() const { return leading_term().exponent; }
const Scalar& Polynomial::leading_coefficient() const { return leading_term().coefficient; }

Scalar Polynomial::coefficient(const Exponent& alpha) const {
  for (const auto& t : terms_)
    if (t.exponent == alpha) return t.coefficient;
  return ring_->field().zero();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (ring_->algebra_ptr() != b.ring_->algebra_ptr()) throw InvalidArgument("polynomials from different algebras");
  if (b.terms_.empty()) return *this;
  if (&b == this) {
    const Polynomial copy(b);
    return *this += copy;
  }
  if (ring_->order() != b.ring_->order()) return *this += b.in_ring(ring_);
  const MonomialOrder& order = ring_->order();
  TermVector out;
  out.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    if (i == terms_.size()) {
      out.push_back(b.terms_[j++]);
      continue;
    }
    const auto c = order.compare(terms_[i].exponent, b.terms_[j].exponent);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Scalar s = terms_[i].coefficient + b.terms_[j].coefficient;
      if (!s.is_zero()) out.push_back(Term{std::move(terms_[i].exponent), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this += -b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.ring_->algebra_ptr() != b.ring_->algebra_ptr()) throw InvalidArgument("polynomials from different algebras");
  const Algebra& alg = a.ring_->algebra();
  Accumulator acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      const Scalar c = s.coefficient * alg.twist(s.exponent, t.coefficient);
      for (const auto& u : *alg.monomial_product(s.exponent, t.exponent))
        accumulate(acc, u.exponent, c * u.coefficient);
    }
  }
  return Polynomial(a.ring_, drain(acc));
}

Polynomial operator*(const Scalar& r, const Polynomial& f) {
  if (r.is_zero()) return Polynomial(f.ring_);
  Polynomial out(f);
  for (auto& t : out.terms_) t.coefficient = r * t.coefficient;
  return out;
}

Polynomial Polynomial::times_scalar_right(const Scalar& r) const {
  if (r.is_zero()) return Polynomial(ring_);
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coefficient *= ring_->algebra().twist(t.exponent, r);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = ring_->one();
  for (unsigned k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return leading_coefficient().inverse() * *this;
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
  if (other->algebra_ptr() != ring_->algebra_ptr()) throw InvalidArgument("rings over different algebras");
  if (other == ring_) return *this;
  return Polynomial(other, terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_->algebra_ptr() != b.ring_->algebra_ptr()) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_->order() != b.ring_->order()) return a == b.in_ring(a.ring_);
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].exponent == b.terms_[k].exponent) || !(a.terms_[k].coefficient == b.terms_[k].coefficient))
      return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  std::vector<std::pair<Scalar, std::string>> parts;
  const auto& names = ring_->presentation().names();
  for (const auto& t : terms_)
    parts.emplace_back(t.coefficient, t.exponent.is_zero() ? std::string() : monomial_string(t.exponent, names));
  return detail::format_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, std::uint32_t max_degree, std::size_t terms,
                             int coefficient_bound) {
  const auto monos = ring->monomials_up_to(max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  TermVector out;
  for (std::size_t k = 0; k < terms; ++k) out.push_back(Term{monos[pick(rng)], ring->field().random(rng, coefficient_bound)});
  return Polynomial(ring, std::move(out));
}

// --------------------------------------------------------------- operations

LeadingData leading_data(const MonomialOrder& order, const Polynomial& f) {
  LeadingData out;
  if (f.is_zero()) {
    out.monomial = Exponent(f.ring()->size());
    out.coefficient = f.ring()->field().zero();
    return out;
  }
  out.zero = false;
  const Term* best = &f.terms().front();
  if (order != f.ring()->order()) {
    for (const auto& t : f.terms())
      if (order.greater(t.exponent, best->exponent)) best = &t;
  }
  out.monomial = best->exponent;
  out.coefficient = best->coefficient;
  return out;
}

ScalarCommutation commute_scalar(const RingPtr& ring, const Exponent& alpha, const Scalar& r) {
  return ScalarCommutation{ring->algebra().twist(alpha, r), ring->zero()};
}

MonomialProduct monomial_product(const RingPtr& ring, const Exponent& alpha, const Exponent& beta) {
  const Polynomial full(ring, *ring->algebra().monomial_product(alpha, beta));
  const Exponent top = alpha + beta;
  const Scalar c = full.coefficient(top);
  return MonomialProduct{c, full - ring->term(c, top)};
}

ConsistencyReport check_pbw_consistency(const Presentation& presentation, unsigned degree_bound) {
  if (degree_bound < 3) throw InvalidArgument("degree_bound must be at least 3");
  const RingPtr ring = Ring::create(presentation);
  const std::size_t n = ring->size();
  const auto& names = presentation.names();
  ConsistencyReport report;

  auto fail = [&](std::string what, std::vector<std::size_t> triple, Polynomial l, Polynomial r) {
    report.consistent = false;
    report.failure = std::move(what);
    report.failing_triple = std::move(triple);
    report.left_association = std::move(l);
    report.right_association = std::move(r);
  };

  // Variable overlaps x_k x_j x_i, i < j < k.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const Polynomial xi = ring->variable(i), xj = ring->variable(j), xk = ring->variable(k);
        Polynomial left = (xk * xj) * xi;
        Polynomial right = xk * (xj * xi);
        ++report.checked;
        if (!(left == right)) {
          fail("(" + names[k] + "*" + names[j] + ")*" + names[i] + " != " + names[k] + "*(" + names[j] + "*" +
                   names[i] + ")",
               {i, j, k}, std::move(left), std::move(right));
          return report;
        }
      }
    }
  }

  // Scalars passing the relations: (x_j x_i) r == x_j (x_i r).
  const Field& F = presentation.field();
  std::vector<Scalar> probes{F.one()};
  if (F.spec().kind != FieldKind::PrimeField && F.degree() > 1) probes.push_back(F.zeta());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      for (const auto& r : probes) {
        const Polynomial xi = ring->variable(i), xj = ring->variable(j), c = ring->constant(r);
        Polynomial left = (xj * xi) * c;
        Polynomial right = xj * (xi * c);
        ++report.checked;
        if (!(left == right)) {
          fail("(" + names[j] + "*" + names[i] + ")*" + r.to_string() + " != " + names[j] + "*(" + names[i] + "*" +
                   r.to_string() + ")",
               {i, j}, std::move(left), std::move(right));
          return report;
        }
      }
    }
  }

  // Monomial triples of bounded total degree.
  const auto monos = ring->monomials_up_to(degree_bound);
  for (const auto& a : monos) {
    if (a.is_zero()) continue;
    for (const auto& b : monos) {
      if (b.is_zero() || a.degree() + b.degree() >= degree_bound) continue;
      for (const auto& c : monos) {
        if (c.is_zero() || a.degree() + b.degree() + c.degree() > degree_bound) continue;
        const Polynomial ma = ring->monomial(a), mb = ring->monomial(b), mc = ring->monomial(c);
        Polynomial left = (ma * mb) * mc;
        Polynomial right = ma * (mb * mc);
        ++report.checked;
        if (!(left == right)) {
          fail("(" + monomial_string(a, names) + "*" + monomial_string(b, names) + ")*" + monomial_string(c, names) +
                   " != " + monomial_string(a, names) + "*(" + monomial_string(b, names) + "*" +
                   monomial_string(c, names) + ")",
               {}, std::move(left), std::move(right));
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace skewpbw
