#include "skewpbw/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "skewpbw/text.hpp"

namespace skewpbw {

namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Exponent& a, const Exponent& b) const { return order->greater(a, b); }
};

/// A polynomial under reduction: terms keyed by exponent, leading term first.
class Workspace {
 public:
  explicit Workspace(const Polynomial& f) : ring_(f.ring()), terms_(OrderGreater{&f.ring()->order()}) {
    for (const auto& t : f.terms()) terms_.emplace_hint(terms_.end(), t.exponent, t.coefficient);
  }

  bool empty() const { return terms_.empty(); }
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  Term pop_leading() {
    auto node = terms_.extract(terms_.begin());
    return Term{std::move(node.key()), std::move(node.mapped())};
  }

  /// this -= u * g
  void subtract(const Scalar& u, const Polynomial& g) {
    for (const auto& t : g.terms()) {
      const Scalar c = u * t.coefficient;
      auto [it, inserted] = terms_.try_emplace(t.exponent, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
  }

 private:
  RingPtr ring_;
  std::map<Exponent, Scalar, OrderGreater> terms_;
};

void check_divisors(const std::vector<Polynomial>& divisors, const Polynomial& f) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (g.ring()->algebra_ptr() != f.ring()->algebra_ptr())
      throw InvalidArgument("divisor from a different algebra");
  }
}

/// Index of the first divisor whose leading monomial divides `beta`, and the
/// quotient exponent.
std::optional<std::pair<std::size_t, Exponent>> find_divisor(const std::vector<Polynomial>& divisors,
                                                             const Exponent& beta) {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (auto theta = monomial_divides(divisors[i].leading_exponent(), beta)) return std::make_pair(i, *theta);
  return std::nullopt;
}

std::vector<Polynomial> in_ring(const std::vector<Polynomial>& fs, const RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.in_ring(ring));
  return out;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const std::optional<MonomialOrder>& order) {
  if (divisors.empty()) throw InvalidArgument("divide needs at least one divisor");
  check_divisors(divisors, f);
  const RingPtr ring = order && *order != f.ring()->order() ? f.ring()->with_order(*order) : f.ring();
  const auto F = in_ring(divisors, ring);
  DivisionResult result{std::vector<Polynomial>(F.size(), ring->zero()), ring->zero()};
  TermVector rest;
  Workspace p(f.in_ring(ring));
  while (!p.empty()) {
    if (auto hit = find_divisor(F, p.leading_exponent())) {
      const auto& [i, theta] = *hit;
      const Polynomial shifted = ring->monomial(theta) * F[i];
      const Scalar u = p.leading_coefficient() / shifted.leading_coefficient();
      result.quotients[i] += ring->term(u, theta);
      p.subtract(u, shifted);
    } else {
      rest.push_back(p.pop_leading());
    }
  }
  result.remainder = Polynomial(ring, std::move(rest));
  return result;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  check_divisors(divisors, f);
  const RingPtr& ring = f.ring();
  TermVector rest;
  Workspace p(f);
  while (!p.empty()) {
    if (auto hit = find_divisor(divisors, p.leading_exponent())) {
      const auto& [i, theta] = *hit;
      const Polynomial shifted = ring->monomial(theta) * divisors[i].in_ring(ring);
      p.subtract(p.leading_coefficient() / shifted.leading_coefficient(), shifted);
    } else {
      rest.push_back(p.pop_leading());
    }
  }
  return Polynomial(ring, std::move(rest));
}

std::string to_string(IdealStatus status) {
  switch (status) {
    case IdealStatus::Proper: return "proper";
    case IdealStatus::ImproperUnit: return "improper_unit";
    case IdealStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Sidedness sidedness) { return sidedness == Sidedness::Left ? "left" : "two_sided"; }

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    case Membership::Unknown: return "unknown";
  }
  return "unknown";
}

// --------------------------------------------------------------- completion

namespace {

/// Buchberger completion state shared by left_groebner and
/// two_sided_saturate.
class Completion {
 public:
  Completion(RingPtr ring, const Budget& budget, std::size_t generator_count, bool certificates)
      : ring_(std::move(ring)),
        budget_(budget),
        ngens_(generator_count),
        certificates_(certificates),
        pairs_(PairLess{&ring_->order()}) {}

  struct Element {
    Polynomial p;
    std::vector<Polynomial> cofactors;  // only with certificates
  };

  bool unit_found() const { return unit_.has_value(); }
  bool incomplete() const { return !deferred_.empty() || budget_hit_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t pairs_processed() const { return processed_; }
  const std::string& diagnostic() const { return diagnostic_; }

  /// Element for generator k (with the trivial certificate).
  Element generator(const Polynomial& f, std::size_t k) const {
    Element e{f.in_ring(ring_), {}};
    if (certificates_) {
      e.cofactors.assign(ngens_, ring_->zero());
      e.cofactors[k] = ring_->one();
    }
    return e;
  }
  Element plain(const Polynomial& f) const { return Element{f.in_ring(ring_), {}}; }

  /// Reduces e fully against the current elements and adjoins the monic
  /// remainder if nonzero. Returns true if something was added.
  bool insert(Element e) {
    if (unit_) return false;
    reduce(e);
    if (e.p.is_zero()) return false;
    const Scalar inv = e.p.leading_coefficient().inverse();
    e.p = inv * e.p;
    for (auto& c : e.cofactors) c = inv * c;
    const std::size_t k = elements_.size();
    if (e.p.is_constant()) {
      unit_ = k;
      elements_.push_back(std::move(e));
      return true;
    }
    const Exponent lk = e.p.leading_exponent();
    elements_.push_back(std::move(e));
    for (std::size_t i = 0; i < k; ++i) {
      Exponent gamma = Exponent::lcm(elements_[i].p.leading_exponent(), lk);
      if (gamma.degree() > budget_.max_degree) {
        deferred_.push_back({i, k});
      } else {
        pairs_.insert(Pair{std::move(gamma), i, k});
      }
    }
    return true;
  }

  /// Processes pairs until none remain, a unit appears or the pair budget is
  /// exhausted.
  void run() {
    while (!pairs_.empty() && !unit_) {
      if (processed_ >= budget_.max_pairs) {
        budget_hit_ = true;
        diagnostic_ = "pair budget of " + std::to_string(budget_.max_pairs) + " exhausted";
        return;
      }
      Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++processed_;
      insert(s_element(pair));
    }
    if (!deferred_.empty() && !unit_ && diagnostic_.empty())
      diagnostic_ = std::to_string(deferred_.size()) + " pair(s) above the degree budget " +
                    std::to_string(budget_.max_degree);
  }

  void note(std::string text) { diagnostic_ = std::move(text); budget_hit_ = true; }

  Element reduced(Element e) const {
    reduce(e);
    return e;
  }

  /// Minimal, inter-reduced, sorted basis (or {1}).
  GroebnerBasis finish(bool reduce_tails) const {
    GroebnerBasis gb;
    gb.ring = ring_;
    std::vector<Element> keep;
    if (unit_) {
      keep.push_back(elements_[*unit_]);
    } else {
      // Minimal: drop elements whose lm is divisible by another's (keeping
      // the earliest among equal leading monomials).
      for (std::size_t a = 0; a < elements_.size(); ++a) {
        const Exponent& la = elements_[a].p.leading_exponent();
        bool redundant = false;
        for (std::size_t b = 0; b < elements_.size() && !redundant; ++b) {
          if (a == b) continue;
          const Exponent& lb = elements_[b].p.leading_exponent();
          if (!monomial_divides(lb, la)) continue;
          redundant = !(la == lb) || b < a;
        }
        if (!redundant) keep.push_back(elements_[a]);
      }
      if (reduce_tails) {
        for (std::size_t a = 0; a < keep.size(); ++a) {
          std::vector<const Element*> others;
          for (std::size_t b = 0; b < keep.size(); ++b)
            if (b != a) others.push_back(&keep[b]);
          reduce_against(keep[a], others);
        }
      }
      std::sort(keep.begin(), keep.end(), [&](const Element& x, const Element& y) {
        return ring_->order().greater(x.p.leading_exponent(), y.p.leading_exponent());
      });
    }
    gb.reduced = reduce_tails || unit_.has_value();
    std::vector<std::vector<Polynomial>> cof;
    for (auto& e : keep) {
      gb.elements.push_back(e.p);
      if (certificates_) cof.push_back(e.cofactors);
    }
    if (certificates_) gb.cofactors = std::move(cof);
    return gb;
  }

 private:
  struct Pair {
    Exponent gamma;
    std::size_t i, j;
  };
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      const auto c = order->compare(a.gamma, b.gamma);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  Element s_element(const Pair& pair) const {
    const Element& gi = elements_[pair.i];
    const Element& gj = elements_[pair.j];
    const Exponent ti = *monomial_divides(gi.p.leading_exponent(), pair.gamma);
    const Exponent tj = *monomial_divides(gj.p.leading_exponent(), pair.gamma);
    const Polynomial mi = ring_->monomial(ti), mj = ring_->monomial(tj);
    const Polynomial pi = mi * gi.p, pj = mj * gj.p;
    const Scalar ui = pi.leading_coefficient().inverse(), uj = pj.leading_coefficient().inverse();
    Element s{ui * pi - uj * pj, {}};
    if (certificates_) {
      for (std::size_t k = 0; k < ngens_; ++k)
        s.cofactors.push_back(ui * (mi * gi.cofactors[k]) - uj * (mj * gj.cofactors[k]));
    }
    return s;
  }

  void reduce(Element& e) const {
    std::vector<const Element*> all;
    for (const auto& g : elements_) all.push_back(&g);
    reduce_against(e, all);
  }

  void reduce_against(Element& e, const std::vector<const Element*>& by) const {
    if (by.empty() || e.p.is_zero()) return;
    TermVector rest;
    Workspace w(e.p);
    while (!w.empty()) {
      const Exponent& beta = w.leading_exponent();
      const Element* hit = nullptr;
      Exponent theta;
      for (const Element* g : by) {
        if (auto t = monomial_divides(g->p.leading_exponent(), beta)) {
          hit = g;
          theta = std::move(*t);
          break;
        }
      }
      if (!hit) {
        rest.push_back(w.pop_leading());
        continue;
      }
      const Polynomial m = ring_->monomial(theta);
      const Polynomial shifted = m * hit->p;
      const Scalar u = w.leading_coefficient() / shifted.leading_coefficient();
      w.subtract(u, shifted);
      if (certificates_) {
        const Polynomial q = u * m;
        for (std::size_t k = 0; k < ngens_; ++k) e.cofactors[k] -= q * hit->cofactors[k];
      }
    }
    e.p = Polynomial(ring_, std::move(rest));
  }

  RingPtr ring_;
  Budget budget_;
  std::size_t ngens_;
  bool certificates_;
  std::vector<Element> elements_;
  std::set<Pair, PairLess> pairs_;
  std::vector<std::pair<std::size_t, std::size_t>> deferred_;
  std::optional<std::size_t> unit_;
  std::size_t processed_ = 0;
  bool budget_hit_ = false;
  std::string diagnostic_;
};

RingPtr ring_of(const std::vector<Polynomial>& gens, const std::optional<MonomialOrder>& order) {
  if (gens.empty()) throw InvalidArgument("an ideal needs at least one generator (use 0 for the zero ideal)");
  const RingPtr& base = gens.front().ring();
  for (const auto& g : gens)
    if (g.ring()->algebra_ptr() != base->algebra_ptr()) throw InvalidArgument("generators from different algebras");
  if (!order || *order == base->order()) return base;
  return base->with_order(*order);
}

IdealHandle package(const Completion& c, std::vector<Polynomial> gens, Sidedness side) {
  IdealHandle h;
  h.generators = std::move(gens);
  h.sidedness = side;
  h.pairs_processed = c.pairs_processed();
  h.diagnostic = c.diagnostic();
  if (c.unit_found()) {
    h.status = IdealStatus::ImproperUnit;
    h.basis = c.finish(false);
    if (h.diagnostic.empty()) h.diagnostic = "a nonzero constant was derived";
  } else {
    h.status = c.incomplete() ? IdealStatus::Unknown : IdealStatus::Proper;
    h.basis = c.finish(true);
  }
  return h;
}

IdealHandle left_groebner_impl(const std::vector<Polynomial>& gens, const std::optional<MonomialOrder>& order,
                               const Budget& budget, bool certificates) {
  const RingPtr ring = ring_of(gens, order);
  Completion c(ring, budget, gens.size(), certificates);
  for (std::size_t k = 0; k < gens.size(); ++k) c.insert(c.generator(gens[k], k));
  c.run();
  return package(c, in_ring(gens, ring), Sidedness::Left);
}

IdealHandle two_sided_impl(const std::vector<Polynomial>& gens, const std::optional<MonomialOrder>& order,
                           const Budget& budget) {
  const RingPtr ring = ring_of(gens, order);
  const Presentation& pres = ring->presentation();
  std::optional<Scalar> field_generator;
  if (!pres.all_sigma_trivial()) {
    const Field& F = ring->field();
    field_generator = F.has_imaginary_unit() && F.spec().kind == FieldKind::GaussianRationals ? F.imaginary_unit()
                                                                                               : F.zeta();
  }
  Completion c(ring, budget, gens.size(), false);
  for (const auto& g : gens) c.insert(c.plain(g));
  std::size_t closed = 0;  // elements [0, closed) are known to be right-closed
  std::size_t rounds = 0;
  bool degree_skipped = false;
  while (true) {
    c.run();
    if (c.unit_found()) break;
    if (rounds >= budget.max_rounds) {
      c.note("saturation round budget of " + std::to_string(budget.max_rounds) + " exhausted");
      break;
    }
    ++rounds;
    std::vector<Completion::Element> fresh;
    const std::size_t count = c.elements().size();
    for (std::size_t k = closed; k < count; ++k) {
      const Polynomial g = c.elements()[k].p;
      std::vector<Polynomial> multiples;
      for (std::size_t j = 0; j < ring->size(); ++j) {
        if (g.degree() + 1 > static_cast<int>(budget.max_degree)) {
          degree_skipped = true;
          break;
        }
        multiples.push_back(g * ring->variable(j));
      }
      if (field_generator) multiples.push_back(g.times_scalar_right(*field_generator));
      for (auto& m : multiples) {
        auto r = c.reduced(c.plain(m));
        if (!r.p.is_zero()) fresh.push_back(std::move(r));
      }
    }
    closed = count;
    bool added = false;
    for (auto& e : fresh) added = c.insert(std::move(e)) || added;
    if (!added) break;
  }
  if (degree_skipped && !c.unit_found())
    c.note("right multiples above the degree budget " + std::to_string(budget.max_degree) + " were not formed");
  IdealHandle h = package(c, in_ring(gens, ring), Sidedness::TwoSided);
  h.rounds = rounds;
  return h;
}

}  // namespace

IdealHandle left_groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order, const Budget& budget,
                          bool certificates) {
  return left_groebner_impl(gens, order, budget, certificates);
}

IdealHandle left_groebner(const std::vector<Polynomial>& gens, const Budget& budget, bool certificates) {
  return left_groebner_impl(gens, std::nullopt, budget, certificates);
}

IdealHandle two_sided_saturate(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                               const Budget& budget) {
  return two_sided_impl(gens, order, budget);
}

IdealHandle two_sided_saturate(const std::vector<Polynomial>& gens, const Budget& budget) {
  return two_sided_impl(gens, std::nullopt, budget);
}

Membership is_member_left(const Polynomial& f, const IdealHandle& ideal) {
  switch (ideal.status) {
    case IdealStatus::ImproperUnit: return Membership::Yes;
    case IdealStatus::Unknown: return Membership::Unknown;
    case IdealStatus::Proper: break;
  }
  return reduce(f.in_ring(ideal.ring()), ideal.basis.elements).is_zero() ? Membership::Yes : Membership::No;
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& ideal) {
  switch (ideal.status) {
    case IdealStatus::ImproperUnit: return ideal.ring()->zero();
    case IdealStatus::Unknown: throw InvalidArgument("normal form modulo an unresolved ideal");
    case IdealStatus::Proper: break;
  }
  return reduce(f.in_ring(ideal.ring()), ideal.basis.elements);
}

// ------------------------------------------------------------- intersection

RingPtr central_extension(const RingPtr& ring, const std::string& name) {
  std::string fresh = name;
  while (ring->presentation().index_of(fresh)) fresh += "_";
  return Ring::create(ring->presentation().with_central_front(fresh), MonomialOrder::block({0}));
}

Polynomial lift_to_extension(const Polynomial& f, const RingPtr& extension) {
  TermVector terms;
  for (const auto& t : f.terms()) {
    Exponent e(extension->size());
    for (std::size_t i = 0; i < t.exponent.size(); ++i) e[i + 1] = t.exponent[i];
    terms.push_back(Term{std::move(e), t.coefficient});
  }
  return Polynomial(extension, std::move(terms));
}

Polynomial drop_front_variable(const Polynomial& f, const RingPtr& base) {
  TermVector terms;
  for (const auto& t : f.terms()) {
    if (t.exponent[0] != 0) throw InvalidArgument("polynomial involves the eliminated variable");
    Exponent e(base->size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exponent[i + 1];
    terms.push_back(Term{std::move(e), t.coefficient});
  }
  return Polynomial(base, std::move(terms));
}

IntersectionResult intersect_left(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                                  const Budget& budget) {
  if (I.empty() || J.empty()) throw InvalidArgument("intersect_left needs generators for both ideals");
  const RingPtr& base = I.front().ring();
  const RingPtr ext = central_extension(base);
  const Polynomial t = ext->variable(0);
  const Polynomial one_minus_t = ext->one() - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I) gens.push_back(t * lift_to_extension(f, ext));
  for (const auto& g : J) gens.push_back(one_minus_t * lift_to_extension(g, ext));
  const IdealHandle h = left_groebner(gens, budget);
  IntersectionResult out;
  out.complete = h.status != IdealStatus::Unknown;
  for (const auto& g : h.basis.elements) {
    if (g.is_zero()) continue;
    if (g.leading_exponent()[0] == 0) out.generators.push_back(drop_front_variable(g, base));
  }
  return out;
}

IntersectionResult intersect_left(const IdealHandle& I, const IdealHandle& J, const Budget& budget) {
  auto gens_of = [](const IdealHandle& h) {
    std::vector<Polynomial> g =
        h.status == IdealStatus::Unknown || h.basis.elements.empty() ? h.generators : h.basis.elements;
    if (g.empty()) g.push_back(h.ring()->zero());
    return g;
  };
  auto out = intersect_left(gens_of(I), gens_of(J), budget);
  if (I.status == IdealStatus::Unknown || J.status == IdealStatus::Unknown) out.complete = false;
  return out;
}

// ------------------------------------------------------------ serialization

std::string order_to_string(const MonomialOrder& order, const std::vector<std::string>& names) {
  switch (order.kind()) {
    case OrderKind::Deglex: return "deglex";
    case OrderKind::Degrevlex: return "degrevlex";
    case OrderKind::Block: {
      std::string s = "block:";
      for (std::size_t k = 0; k < order.front().size(); ++k) {
        if (k) s += ",";
        s += names.at(order.front()[k]);
      }
      return s;
    }
  }
  return "deglex";
}

MonomialOrder parse_order(std::string_view text, const std::vector<std::string>& names) {
  if (text == "deglex") return MonomialOrder::deglex();
  if (text == "degrevlex") return MonomialOrder::degrevlex();
  if (text.substr(0, 6) == "block:") {
    std::vector<std::size_t> front;
    std::string_view rest = text.substr(6);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string name(rest.substr(0, comma));
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw InvalidArgument("unknown variable '" + name + "' in block order");
      front.push_back(static_cast<std::size_t>(it - names.begin()));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (front.empty()) throw InvalidArgument("block order needs at least one variable");
    return MonomialOrder::block(std::move(front));
  }
  throw InvalidArgument("unknown monomial order '" + std::string(text) + "'");
}

std::string serialize_ideal(const IdealHandle& ideal) {
  const auto& names = ideal.ring()->presentation().names();
  nlohmann::json doc;
  doc["presentation"] = ideal.ring()->presentation().digest();
  doc["order"] = order_to_string(ideal.ring()->order(), names);
  doc["sidedness"] = to_string(ideal.sidedness);
  doc["status"] = to_string(ideal.status);
  doc["generators"] = nlohmann::json::array();
  for (const auto& g : ideal.generators) doc["generators"].push_back(g.to_string());
  doc["elements"] = nlohmann::json::array();
  for (const auto& g : ideal.basis.elements) doc["elements"].push_back(g.to_string());
  doc["reduced"] = ideal.basis.reduced;
  if (ideal.basis.cofactors) {
    auto& certs = doc["certificates"] = nlohmann::json::array();
    for (const auto& row : *ideal.basis.cofactors) {
      auto r = nlohmann::json::array();
      for (const auto& c : row) r.push_back(c.to_string());
      certs.push_back(r);
    }
  }
  if (!ideal.diagnostic.empty()) doc["diagnostic"] = ideal.diagnostic;
  return doc.dump(2);
}

}  // namespace skewpbw
