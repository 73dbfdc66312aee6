#include "skewpbw/geometry.hpp"

#include <algorithm>

#include "skewpbw/expression.hpp"
#include "skewpbw/linalg.hpp"
#include "skewpbw/text.hpp"

namespace skewpbw {

std::string point_string(const Point& z) {
  std::string s = "(";
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (k) s += ", ";
    s += z[k].to_string();
  }
  return s + ")";
}

// ----------------------------------------------------------------- domains

SearchDomain SearchDomain::grid(std::vector<std::vector<Scalar>> axes) {
  SearchDomain d;
  d.kind = Kind::Grid;
  d.axes = std::move(axes);
  return d;
}

SearchDomain SearchDomain::integer_grid(const Field& field, std::size_t n, long lo, long hi) {
  std::vector<Scalar> axis;
  for (long v = lo; v <= hi; ++v) axis.push_back(field.from_int(v));
  return grid(std::vector<std::vector<Scalar>>(n, axis));
}

SearchDomain SearchDomain::full_prime_field(const Field& field, std::size_t n) {
  if (field.spec().kind != FieldKind::PrimeField) throw InvalidArgument("the full-field domain needs GF(p)");
  const std::uint64_t p = field.characteristic();
  double total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= static_cast<double>(p);
  if (total > 1e6) throw InvalidArgument("GF(p)^n has more than 10^6 points; use a grid");
  std::vector<Scalar> axis;
  for (std::uint64_t v = 0; v < p; ++v) axis.push_back(field.from_int(static_cast<long>(v)));
  SearchDomain d = grid(std::vector<std::vector<Scalar>>(n, axis));
  d.kind = Kind::FullPrimeField;
  return d;
}

std::size_t SearchDomain::size() const {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  return axes.empty() ? 0 : total;
}

std::vector<Point> SearchDomain::points() const {
  std::vector<Point> out;
  if (axes.empty()) return out;
  for (const auto& a : axes)
    if (a.empty()) return out;
  std::vector<std::size_t> pos(axes.size(), 0);
  while (true) {
    Point z;
    for (std::size_t k = 0; k < axes.size(); ++k) z.push_back(axes[k][pos[k]]);
    out.push_back(std::move(z));
    std::size_t k = axes.size();
    while (k-- > 0) {
      if (++pos[k] < axes[k].size()) break;
      pos[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

namespace {

std::vector<Scalar> parse_axis(std::string_view text, const Field& field) {
  std::vector<Scalar> axis;
  for (const auto& item : expr::split_top_level(text)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      axis.push_back(parse_scalar(item, field));
      continue;
    }
    const long lo = std::stol(item.substr(0, dots));
    const long hi = std::stol(item.substr(dots + 2));
    if (hi < lo) throw InvalidArgument("empty range '" + item + "'");
    if (hi - lo > 10000) throw InvalidArgument("range '" + item + "' is too long");
    for (long v = lo; v <= hi; ++v) axis.push_back(field.from_int(v));
  }
  if (axis.empty()) throw InvalidArgument("empty grid axis");
  return axis;
}

}  // namespace

SearchDomain parse_domain(std::string_view text, const Field& field, std::size_t n) {
  if (text == "gf") return SearchDomain::full_prime_field(field, n);
  if (text.substr(0, 5) != "grid:") throw InvalidArgument("domain must be grid:<spec> or gf");
  std::vector<std::string> parts;
  std::string_view rest = text.substr(5);
  while (true) {
    const auto semi = rest.find(';');
    parts.emplace_back(rest.substr(0, semi));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  std::vector<std::vector<Scalar>> axes;
  if (parts.size() == 1) {
    axes.assign(n, parse_axis(parts[0], field));
  } else if (parts.size() == n) {
    for (const auto& p : parts) axes.push_back(parse_axis(p, field));
  } else {
    throw InvalidArgument("grid has " + std::to_string(parts.size()) + " axes for " + std::to_string(n) +
                          " variables");
  }
  return SearchDomain::grid(std::move(axes));
}

// ----------------------------------------------------------- point ideals

bool PointIdealCache::PointLess::operator()(const Point& a, const Point& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
}

PointIdealCache::PointIdealCache(RingPtr ring, Budget budget) : ring_(std::move(ring)), budget_(budget) {}

std::shared_ptr<const PointIdeal> PointIdealCache::get(const Point& z) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(z); it != cache_.end()) return it->second;
  }
  auto pi = std::make_shared<const PointIdeal>(point_ideal(ring_, z, budget_));
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(z, std::move(pi)).first->second;
}

PointIdeal point_ideal(const RingPtr& ring, const Point& z, const Budget& budget) {
  if (z.size() != ring->size())
    throw InvalidArgument("point has " + std::to_string(z.size()) + " coordinates for " +
                          std::to_string(ring->size()) + " variables");
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (&z[k].field() != &ring->field()) throw FieldMismatch();
    gens.push_back(ring->variable(k) - ring->constant(z[k]));
  }
  return PointIdeal{z, two_sided_saturate(gens, budget)};
}

Membership is_root(const Polynomial& f, const Point& z, PointIdealCache& cache) {
  return is_member_left(f, cache.get(z)->handle);
}

Membership is_root(const Polynomial& f, const Point& z, const Budget& budget) {
  PointIdealCache cache(f.ring(), budget);
  return is_root(f, z, cache);
}

std::string to_string(PointStatus s) {
  switch (s) {
    case PointStatus::Root: return "root";
    case PointStatus::NonRoot: return "non-root";
    case PointStatus::Degenerate: return "degenerate";
    case PointStatus::Unknown: return "unknown";
  }
  return "unknown";
}

VanishingResult vanishing_set(const std::vector<Polynomial>& S, const SearchDomain& domain, PointIdealCache& cache) {
  if (domain.dimension() != cache.ring()->size()) throw InvalidArgument("domain dimension does not match the ring");
  VanishingResult out;
  for (auto& z : domain.points()) {
    const auto pi = cache.get(z);
    PointStatus status = PointStatus::Root;
    if (pi->degenerate()) {
      status = PointStatus::Degenerate;
    } else {
      for (const auto& f : S) {
        const Membership m = is_member_left(f, pi->handle);
        if (m == Membership::No) {
          status = PointStatus::NonRoot;
          break;
        }
        if (m == Membership::Unknown) status = PointStatus::Unknown;
      }
    }
    switch (status) {
      case PointStatus::Degenerate: out.degenerate.push_back(z); [[fallthrough]];
      case PointStatus::Root: out.points.push_back(z); break;
      case PointStatus::Unknown: out.unknown.push_back(z); break;
      case PointStatus::NonRoot: break;
    }
    out.table.push_back(VanishingEntry{std::move(z), status});
  }
  return out;
}

// ------------------------------------------------------- ideals of points

std::vector<Polynomial> span_basis(const RingPtr& ring, const std::vector<Polynomial>& fs) {
  std::vector<Exponent> monos;
  for (const auto& f : fs)
    for (const auto& t : f.terms()) monos.push_back(t.exponent);
  std::sort(monos.begin(), monos.end(), [&](const Exponent& a, const Exponent& b) { return ring->order().greater(a, b); });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  const linalg::MonomialIndex index(std::move(monos));
  linalg::Matrix rows;
  for (const auto& f : fs) rows.push_back(index.to_vector(f.in_ring(ring)));
  const auto e = linalg::row_reduce(std::move(rows), index.size(), ring->field());
  std::vector<Polynomial> out;
  for (const auto& r : e.rows) out.push_back(index.to_polynomial(ring, r));
  return out;
}

std::vector<Polynomial> ideal_of_points(const std::vector<Point>& X, std::uint32_t d, PointIdealCache& cache) {
  const RingPtr& ring = cache.ring();
  const Field& F = ring->field();
  const linalg::MonomialIndex columns(ring->monomials_up_to(d));
  linalg::Matrix constraints;
  for (const auto& z : X) {
    const auto pi = cache.get(z);
    if (pi->handle.status == IdealStatus::Unknown)
      throw InvalidArgument("point ideal of " + point_string(z) + " is unresolved; raise the budget");
    if (pi->degenerate()) continue;
    // Row per normal-form monomial: coefficient of that monomial in NF(x^beta).
    std::map<Exponent, std::size_t> row_of;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Polynomial nf = normal_form(ring->monomial(columns.monomials()[c]), pi->handle);
      for (const auto& t : nf.terms()) {
        auto [it, inserted] = row_of.try_emplace(t.exponent, constraints.size());
        if (inserted) constraints.emplace_back(columns.size(), F.zero());
        constraints[it->second][c] = t.coefficient;
      }
    }
  }
  const auto kernel = linalg::nullspace(constraints, columns.size(), F);
  const auto e = linalg::row_reduce(kernel, columns.size(), F);
  std::vector<Polynomial> out;
  for (const auto& r : e.rows) out.push_back(columns.to_polynomial(ring, r));
  return out;
}

// --------------------------------------------------------------- witnesses

WitnessResult algebraic_witness(const std::vector<Point>& X, PointIdealCache& cache) {
  const RingPtr& ring = cache.ring();
  WitnessResult out;
  auto f_of = [&](const Point* z) {
    Polynomial f = ring->zero();
    for (std::size_t k = 0; k < ring->size(); ++k) {
      f += ring->variable(k);
      if (z) f -= ring->constant((*z)[k]);
    }
    return f;
  };
  if (X.empty()) {
    out.witness = f_of(nullptr);
    out.verified = true;
    out.diagnostic = "empty set: any x_1 - z_1 + ... + x_n - z_n works";
    return out;
  }
  std::vector<Polynomial> current{f_of(&X.front())};
  bool complete = true;
  for (std::size_t k = 1; k < X.size(); ++k) {
    auto r = intersect_left(current, {f_of(&X[k])}, cache.budget());
    complete = complete && r.complete;
    current = std::move(r.generators);
    if (current.empty()) {
      out.diagnostic = "intersection came back empty at point " + point_string(X[k]) + " (budget too small?)";
      return out;
    }
  }
  const Polynomial* best = nullptr;
  for (const auto& g : current) {
    if (g.is_zero()) continue;
    if (!best || ring->order().greater(best->leading_exponent(), g.in_ring(ring).leading_exponent())) best = &g;
  }
  if (!best) {
    out.diagnostic = "no nonzero element found";
    return out;
  }
  out.witness = best->in_ring(ring);
  out.verified = true;
  for (const auto& z : X) {
    if (is_root(*out.witness, z, cache) != Membership::Yes) {
      out.verified = false;
      out.diagnostic = "root check inconclusive at " + point_string(z);
    }
  }
  if (!complete && out.diagnostic.empty()) out.diagnostic = "intersection basis hit the budget; witness still verified";
  return out;
}

// ------------------------------------------------------------ semiprimeness

SemiprimeReport semiprime_probe(const Point& z, std::size_t samples, std::uint32_t max_degree, std::mt19937_64& rng,
                                PointIdealCache& cache) {
  const RingPtr& ring = cache.ring();
  if (!classify(ring->presentation()).quasi_commutative)
    throw Unsupported("semiprime_probe needs a quasi-commutative presentation");
  SemiprimeReport report;
  report.point = z;
  const auto pi = cache.get(z);
  report.ideal_status = pi->handle.status;
  if (pi->handle.status == IdealStatus::Unknown) {
    report.unknown = samples;
    report.samples = samples;
    return report;
  }
  std::uniform_int_distribution<std::size_t> nterms(1, 4);
  for (std::size_t k = 0; k < samples; ++k) {
    Polynomial f = random_polynomial(ring, rng, max_degree, nterms(rng));
    if (k % 2 == 1) {
      const Polynomial g = f - normal_form(f, pi->handle);
      if (!g.is_zero()) f = g;
    }
    ++report.samples;
    const Membership in = is_member_left(f, pi->handle);
    const Membership sq = is_member_left(f * f, pi->handle);
    if (in == Membership::Unknown || sq == Membership::Unknown) {
      ++report.unknown;
      continue;
    }
    if (in == Membership::Yes) ++report.members;
    if (in == sq) {
      ++report.consistent;
    } else {
      report.counterexamples.push_back(f);
    }
  }
  return report;
}

// ------------------------------------------------------------- hypersurfaces

std::vector<std::string> HypersurfaceTags::names() const {
  std::vector<std::string> out;
  if (hypersurface) out.push_back("hypersurface");
  if (plane_curve) out.push_back("plane curve");
  if (hyperplane) out.push_back("hyperplane");
  if (line) out.push_back("line");
  return out;
}

HypersurfaceTags classify_hypersurface(const Polynomial& f) {
  HypersurfaceTags tags;
  if (f.is_constant()) {
    tags.diagnostic = "f is a scalar, so it defines no hypersurface";
    return tags;
  }
  const std::size_t n = f.ring()->size();
  tags.hypersurface = true;
  tags.plane_curve = n == 2;
  tags.hyperplane = f.degree() == 1;
  tags.line = n == 2 && f.degree() == 1;
  return tags;
}

Point random_point(const Field& field, std::size_t n, std::mt19937_64& rng, int bound) {
  Point z;
  for (std::size_t k = 0; k < n; ++k) z.push_back(field.random(rng, bound));
  return z;
}

}  // namespace skewpbw
