#include "skewpbw/nullstellensatz.hpp"

#include <algorithm>
#include <numeric>

#include "skewpbw/linalg.hpp"
#include "skewpbw/normality.hpp"

namespace skewpbw {

namespace {

bool is_commutative(const Presentation& p) {
  if (!p.all_sigma_trivial()) return false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = p.relation(i, j);
      if (!r.c.is_one() || r.has_lower_terms()) return false;
    }
  }
  return true;
}

void require_commutative(const RingPtr& ring) {
  if (!is_commutative(ring->presentation())) throw InvalidArgument("expected a commutative polynomial ring");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Central monomials x^(L k) with |L k| <= d, as (A-exponent, center exponent).
std::vector<std::pair<Exponent, Exponent>> central_monomials(const CenterDescription& C, std::uint32_t d) {
  std::vector<std::pair<Exponent, Exponent>> out;
  const std::size_t n = C.exponents.size();
  Exponent k(n), a(n);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == n) {
      out.emplace_back(a, k);
      return;
    }
    for (std::uint32_t v = 0; v * C.exponents[i] <= left; ++v) {
      k[i] = v;
      a[i] = v * C.exponents[i];
      self(self, i + 1, left - v * C.exponents[i]);
    }
    k[i] = 0;
    a[i] = 0;
  };
  rec(rec, 0, d);
  const MonomialOrder& order = C.ring->order();
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
  return out;
}

}  // namespace

std::vector<std::string> center_variable_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 3 ? std::string(1, "uvw"[i]) : "u" + std::to_string(i + 1));
  return out;
}

std::optional<std::uint64_t> root_of_unity_order(const Scalar& c) {
  if (c.is_zero()) return std::nullopt;
  const Field& F = c.field();
  if (F.spec().kind == FieldKind::PrimeField) {
    std::uint64_t order = F.characteristic() - 1;
    if (order == 0) return 1;
    for (auto q : prime_factors(order))
      while (order % q == 0 && c.pow(static_cast<std::int64_t>(order / q)).is_one()) order /= q;
    return order;
  }
  const std::uint64_t bound = std::lcm<std::uint64_t>(2, std::max<std::uint64_t>(F.root_order(), 1));
  Scalar p = c;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= c;
  }
  return std::nullopt;
}

Polynomial CenterDescription::lift(const Polynomial& central) const {
  TermVector terms;
  for (const auto& t : central.terms()) {
    Exponent e(exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exponent[i] * exponents[i];
    terms.push_back(Term{std::move(e), t.coefficient});
  }
  return Polynomial(ring, std::move(terms));
}

CenterDescription center_generators(const RingPtr& ring) {
  const Presentation& P = ring->presentation();
  const std::size_t n = P.size();
  if (!classify(P).quasi_commutative) throw Unsupported("the presentation is not quasi-commutative");
  if (!P.all_sigma_trivial()) throw Unsupported("some sigma_i is not the identity");
  std::vector<std::uint32_t> L(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Scalar& c = P.relation(i, j).c;
      const auto d = root_of_unity_order(c);
      if (!d) throw Unsupported("c_" + P.name(i) + P.name(j) + " = " + c.to_string() + " is not a root of unity");
      if (*d > 1000) throw Unsupported("root of unity of order " + std::to_string(*d) + " is too large");
      L[i] = std::lcm<std::uint32_t>(L[i], static_cast<std::uint32_t>(*d));
      L[j] = std::lcm<std::uint32_t>(L[j], static_cast<std::uint32_t>(*d));
    }
  }
  CenterDescription C;
  C.ring = ring;
  C.exponents = L;
  C.center_ring = Ring::create(Presentation(P.field(), center_variable_names(n)));
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n);
    e[i] = L[i];
    C.generators.push_back(ring->monomial(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial xj = ring->variable(j);
      if (!(C.generators[i] * xj == xj * C.generators[i]))
        throw Error("centrality check failed for " + C.generators[i].to_string());
    }
  }
  C.verified = true;

  // No central monomial strictly inside the box [0, L_1) x ... x [0, L_n).
  std::uint64_t box = 1;
  for (auto l : L) box *= l;
  if (box > 200000) throw Unsupported("too many monomials to certify the center");
  Exponent a(n);
  for (std::uint64_t code = 1; code < box; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<std::uint32_t>(rest % L[i]);
      rest /= L[i];
    }
    const Polynomial m = ring->monomial(a);
    bool central = true;
    for (std::size_t j = 0; j < n && central; ++j) central = m * ring->variable(j) == ring->variable(j) * m;
    if (central)
      throw Unsupported(m.to_string() + " is central, so the center is not the polynomial ring in the x_i^L_i");
  }
  C.polynomial_ring = true;
  C.notes = "checked " + std::to_string(n * n) + " commutations and " + std::to_string(box - 1) +
            " monomials below the generators";
  return C;
}

Contraction contract_to_center(const IdealHandle& I, const CenterDescription& C, std::uint32_t d) {
  if (I.status == IdealStatus::Unknown) throw InvalidArgument("contraction of an unresolved ideal");
  if (!C.verified) throw InvalidArgument("center description is not verified");
  const RingPtr& A = C.ring;
  const Field& F = A->field();
  const auto monos = central_monomials(C, d);
  std::vector<Exponent> a_monos;
  for (const auto& m : monos) a_monos.push_back(m.first);
  const linalg::MonomialIndex columns(a_monos);

  linalg::Matrix constraints;
  if (I.status == IdealStatus::Proper) {
    std::map<Exponent, std::size_t> row_of;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Polynomial nf = normal_form(A->monomial(a_monos[c]), I);
      for (const auto& t : nf.terms()) {
        auto [it, inserted] = row_of.try_emplace(t.exponent, constraints.size());
        if (inserted) constraints.emplace_back(columns.size(), F.zero());
        constraints[it->second][c] = t.coefficient;
      }
    }
  }
  const auto kernel = linalg::nullspace(constraints, columns.size(), F);
  std::vector<Polynomial> central;
  for (const auto& v : kernel) {
    TermVector terms;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) terms.push_back(Term{monos[k].second, v[k]});
    central.push_back(Polynomial(C.center_ring, std::move(terms)));
  }
  Contraction out;
  out.central = span_basis(C.center_ring, central);
  for (const auto& g : out.central) out.lifted.push_back(C.lift(g));
  return out;
}

Membership radical_membership_commutative(const Polynomial& f, const std::vector<Polynomial>& J,
                                          const Budget& budget) {
  const RingPtr& ring = f.ring();
  require_commutative(ring);
  if (f.is_zero()) return Membership::Yes;
  const RingPtr ext = central_extension(ring)->with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : J)
    if (!g.is_zero()) gens.push_back(lift_to_extension(g, ext));
  gens.push_back(ext->one() - ext->variable(0) * lift_to_extension(f, ext));
  const IdealHandle h = left_groebner(gens, budget);
  switch (h.status) {
    case IdealStatus::ImproperUnit: return Membership::Yes;
    case IdealStatus::Proper: return Membership::No;
    case IdealStatus::Unknown: return Membership::Unknown;
  }
  return Membership::Unknown;
}

std::vector<Polynomial> commutative_points_ideal(const RingPtr& ring, const std::vector<Point>& V,
                                                 const Budget& budget) {
  require_commutative(ring);
  if (V.empty()) return {ring->one()};
  auto maximal = [&](const Point& p) {
    std::vector<Polynomial> m;
    for (std::size_t i = 0; i < ring->size(); ++i) m.push_back(ring->variable(i) - ring->constant(p[i]));
    return m;
  };
  std::vector<Polynomial> current = maximal(V.front());
  for (std::size_t k = 1; k < V.size(); ++k) {
    auto r = intersect_left(current, maximal(V[k]), budget);
    if (!r.complete) throw Error("budget exhausted while intersecting point ideals");
    current = std::move(r.generators);
  }
  const IdealHandle h = left_groebner(current, budget);
  if (h.status == IdealStatus::Unknown) throw Error("budget exhausted while reducing the points ideal");
  return h.basis.elements;
}

Scalar evaluate_commutative(const Polynomial& f, const Point& p) {
  const Field& F = f.ring()->field();
  Scalar total = F.zero();
  for (const auto& t : f.terms()) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (t.exponent[i]) v *= p[i].pow(t.exponent[i]);
    total += v;
  }
  return total;
}

NilpotencyResult central_nilpotency(const Polynomial& w, const IdealHandle& I, unsigned max_exponent) {
  NilpotencyResult out;
  if (w.is_zero()) {
    out.exponent = 1;
    return out;
  }
  if (!central_probe(w)) throw InvalidArgument(w.to_string() + " is not central");
  Polynomial power = w;
  for (unsigned m = 1; m <= max_exponent; ++m) {
    if (m > 1) power = power * w;
    switch (is_member_left(power, I)) {
      case Membership::Yes: out.exponent = m; return out;
      case Membership::Unknown: out.unknown = true; break;
      case Membership::No: break;
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SandwichReport verify_sandwich(const IdealHandle& I, const CenterDescription& C, const SearchDomain& domain,
                               std::uint32_t d, unsigned max_exponent, PointIdealCache& cache) {
  SandwichReport report;
  if (I.status == IdealStatus::Unknown) {
    report.notes.push_back("I is unresolved: " + I.diagnostic);
    return report;
  }
  const Budget& budget = cache.budget();

  // (1) contraction
  report.J = contract_to_center(I, C, d);

  // (2) zeros of J in center coordinates
  for (const auto& p : domain.points()) {
    bool zero = true;
    for (const auto& g : report.J.central)
      if (!evaluate_commutative(g, p).is_zero()) {
        zero = false;
        break;
      }
    if (zero) report.center_points.push_back(p);
  }

  // (3) ideal of those points, keeping generators certified in sqrt(J)
  bool first_ok = true;
  for (const auto& g : commutative_points_ideal(C.center_ring, report.center_points, budget)) {
    const Membership m = radical_membership_commutative(g, report.J.central, budget);
    if (m == Membership::No) {
      report.grid_artifacts.push_back(g);
      continue;
    }
    SandwichGenerator sg{g, C.lift(g), m, std::nullopt, false, std::nullopt, ""};
    if (m == Membership::Unknown) {
      first_ok = false;
      sg.note = "radical membership in sqrt(J) undecided within budget";
    }
    // (4) nilpotency certificate for the first inclusion
    const auto nil = central_nilpotency(sg.lifted, I, max_exponent);
    sg.nilpotency = nil.exponent;
    if (!nil.exponent) {
      first_ok = false;
      sg.note += (sg.note.empty() ? "" : "; ") + std::string("no power up to ") + std::to_string(max_exponent) +
                 " lies in I";
    }
    report.generators.push_back(std::move(sg));
  }
  if (!report.grid_artifacts.empty())
    report.notes.push_back(std::to_string(report.grid_artifacts.size()) +
                           " generator(s) vanish on the grid trace but not on V_Z(J); excluded");
  if (report.generators.empty()) report.notes.push_back("no certified generators; nothing to confirm");
  report.first_inclusion = first_ok && !report.generators.empty() ? Verdict::Confirmed : Verdict::Inconclusive;

  // (5) certified sqrt(I) witnesses must vanish on V(I)
  report.variety = vanishing_set(I.generators, domain, cache);
  bool second_ok = report.variety.unknown.empty();
  if (!second_ok) report.notes.push_back("V(I) has points of unknown status on the domain");
  bool refuted = false;
  std::size_t witnesses = 0;
  for (auto& sg : report.generators) {
    if (!sg.nilpotency) continue;
    ++witnesses;
    sg.vanishes_on_V = true;
    for (const auto& z : report.variety.points) {
      const Membership m = is_root(sg.lifted, z, cache);
      if (m == Membership::Yes) continue;
      sg.vanishes_on_V = false;
      if (m == Membership::No) {
        sg.counterexample = z;
        refuted = true;
      } else {
        second_ok = false;
      }
      break;
    }
  }
  if (refuted) {
    report.second_inclusion = Verdict::Refuted;
  } else if (second_ok && witnesses > 0) {
    report.second_inclusion = Verdict::Confirmed;
  } else {
    report.second_inclusion = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace skewpbw
