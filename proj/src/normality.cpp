#include "skewpbw/normality.hpp"

#include <map>

#include "skewpbw/linalg.hpp"

namespace skewpbw {

namespace {

/// A field element generating F over its prime subfield, if F is larger.
std::optional<Scalar> field_generator(const Field& F) {
  if (F.degree() == 1) return std::nullopt;
  return F.spec().kind == FieldKind::GaussianRationals ? F.imaginary_unit() : F.zeta();
}

/// Generators of A as a ring over the prime field that the tests must cover:
/// the variables, plus the field generator when some sigma_i moves scalars.
std::vector<std::pair<std::string, Polynomial>> ring_generators(const RingPtr& ring) {
  std::vector<std::pair<std::string, Polynomial>> out;
  for (std::size_t j = 0; j < ring->size(); ++j) out.emplace_back(ring->presentation().name(j), ring->variable(j));
  if (!ring->presentation().all_sigma_trivial()) {
    if (auto r = field_generator(ring->field())) out.emplace_back(r->to_string(), ring->constant(*r));
  }
  return out;
}

/// Solves sum c_k products[k] = target for c_k in the prime subfield.
std::optional<std::vector<Scalar>> solve_prime(const std::vector<Polynomial>& products, const Polynomial& target) {
  const Field& F = target.ring()->field();
  const Field& K = F.prime_subfield();
  const std::size_t dim = F.degree();
  std::map<Exponent, std::size_t> rows_of;  // monomial -> first row (dim rows each)
  auto row = [&](const Exponent& e) {
    auto [it, inserted] = rows_of.try_emplace(e, rows_of.size() * dim);
    return it->second;
  };
  for (const auto& p : products)
    for (const auto& t : p.terms()) row(t.exponent);
  for (const auto& t : target.terms()) row(t.exponent);
  const std::size_t nrows = rows_of.size() * dim;
  linalg::Matrix A(nrows, linalg::Vector(products.size(), K.zero()));
  linalg::Vector b(nrows, K.zero());
  for (std::size_t k = 0; k < products.size(); ++k) {
    for (const auto& t : products[k].terms()) {
      const auto coords = F.coordinates(t.coefficient);
      for (std::size_t l = 0; l < dim; ++l) A[row(t.exponent) + l][k] = coords[l];
    }
  }
  for (const auto& t : target.terms()) {
    const auto coords = F.coordinates(t.coefficient);
    for (std::size_t l = 0; l < dim; ++l) b[row(t.exponent) + l] = coords[l];
  }
  return linalg::solve(A, b, products.size(), K);
}

Scalar embed(const Scalar& k, const Field& F) {
  if (&k.field() == &F) return k;
  return F.from_rational(k.rational_value());
}

}  // namespace

bool central_probe(const Polynomial& f) {
  for (const auto& [name, a] : ring_generators(f.ring()))
    if (!(f * a == a * f)) return false;
  return true;
}

std::string to_string(NormalStatus s) {
  switch (s) {
    case NormalStatus::Normal: return "normal";
    case NormalStatus::NotNormal: return "not_normal";
    case NormalStatus::Unknown: return "unknown";
  }
  return "unknown";
}

NormalElement normal_from_parts(const RingPtr& ring, const Scalar& c, const Exponent& alpha, const Polynomial& h) {
  if (!classify(ring->presentation()).quasi_commutative)
    throw Unsupported("normal_from_parts needs a quasi-commutative presentation");
  if (c.is_zero()) throw InvalidArgument("c must be nonzero");
  if (!central_probe(h)) throw InvalidArgument("h = " + h.to_string() + " is not central");
  NormalElement out{ring->term(c, alpha) * h.in_ring(ring), {}};
  out.verdict.status = NormalStatus::Normal;
  out.verdict.certificate = "structure";
  out.verdict.diagnostic = "f = c*x^alpha*h with h central";
  return out;
}

NormalityVerdict is_normal(const Polynomial& f, unsigned slack) {
  if (f.is_zero()) throw InvalidArgument("is_normal needs a nonzero element");
  const RingPtr& ring = f.ring();
  const Field& F = ring->field();
  NormalityVerdict verdict;
  verdict.certificate = "generator-solve";
  for (const auto& [name, a] : ring_generators(ring)) {
    const std::uint32_t bound = static_cast<std::uint32_t>(a.degree()) + slack;
    std::vector<Polynomial> unknowns;  // e_b x^beta
    for (const auto& beta : ring->monomials_up_to(bound))
      for (std::size_t b = 0; b < F.degree(); ++b) unknowns.push_back(ring->term(F.basis_element(b), beta));
    for (const char* direction : {"left", "right"}) {
      const bool left = direction[0] == 'l';
      std::vector<Polynomial> products;
      for (const auto& u : unknowns) products.push_back(left ? f * u : u * f);
      const Polynomial target = left ? a * f : f * a;
      NormalWitness w{direction, name, std::nullopt};
      if (auto c = solve_prime(products, target)) {
        Polynomial g = ring->zero();
        for (std::size_t k = 0; k < unknowns.size(); ++k)
          if (!(*c)[k].is_zero()) g += embed((*c)[k], F) * unknowns[k];
        w.g = std::move(g);
        verdict.witnesses.push_back(std::move(w));
      } else {
        verdict.status = NormalStatus::NotNormal;
        verdict.diagnostic = left ? "no g with f*g = " + name + "*f" : "no g with g*f = f*" + name;
        verdict.counter_witness = std::move(w);
        return verdict;
      }
    }
  }
  verdict.status = NormalStatus::Normal;
  return verdict;
}

}  // namespace skewpbw
