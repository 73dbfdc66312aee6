#include "skewpbw/text.hpp"

#include <sstream>

#include "evaluate.hpp"
#include "skewpbw/expression.hpp"
#include "text_internal.hpp"

namespace skewpbw {

std::optional<Scalar> detail::scalar_symbol(std::string_view name, const Field& field) {
  if (name == "i" && field.has_imaginary_unit()) return field.imaginary_unit();
  if ((name == "z" || name == "zeta") && field.spec().kind != FieldKind::PrimeField) return field.zeta();
  return std::nullopt;
}

namespace {

struct ScalarOps {
  const Field& field;

  Scalar integer(const expr::Node& n) const { return field.from_rational(mpq_class(n.integer)); }
  Scalar symbol(const expr::Node& n) const {
    if (auto s = detail::scalar_symbol(n.symbol, field)) return *s;
    throw ParseError("unknown symbol '" + n.symbol + "' in scalar over " + field.spec().to_string(), n.position);
  }
  Scalar negate(const Scalar& a) const { return -a; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar divide(const Scalar& a, const Scalar& b, const expr::Node& n) const {
    if (b.is_zero()) throw ParseError("division by zero", n.position);
    return a / b;
  }
  Scalar power(const Scalar& a, unsigned long e) const { return a.pow(static_cast<std::int64_t>(e)); }
};

struct PolynomialOps {
  const RingPtr& ring;

  Polynomial integer(const expr::Node& n) const {
    return ring->constant(ring->field().from_rational(mpq_class(n.integer)));
  }
  Polynomial symbol(const expr::Node& n) const {
    if (auto idx = ring->presentation().index_of(n.symbol)) return ring->variable(*idx);
    if (auto s = detail::scalar_symbol(n.symbol, ring->field())) return ring->constant(*s);
    throw ParseError("unknown variable '" + n.symbol + "'", n.position);
  }
  Polynomial negate(const Polynomial& a) const { return -a; }
  Polynomial add(Polynomial a, const Polynomial& b) const { return a += b; }
  Polynomial sub(Polynomial a, const Polynomial& b) const { return a -= b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
  Polynomial divide(const Polynomial& a, const Polynomial& b, const expr::Node& n) const {
    if (!b.is_constant()) throw ParseError("division by a non-scalar", n.position);
    if (b.is_zero()) throw ParseError("division by zero", n.position);
    return a.times_scalar_right(b.leading_coefficient().inverse());
  }
  Polynomial power(const Polynomial& a, unsigned long e) const { return a.pow(static_cast<unsigned>(e)); }
};

struct FreeOps {
  const Field& field;
  const std::vector<std::string>& names;
  const std::vector<AutomorphismSpec>& sigma;

  detail::FreeSum single(const std::vector<std::size_t>& word, const Scalar& c) const {
    detail::FreeSum s;
    if (!c.is_zero()) s.emplace(word, c);
    return s;
  }
  detail::FreeSum integer(const expr::Node& n) const {
    return single({}, field.from_rational(mpq_class(n.integer)));
  }
  detail::FreeSum symbol(const expr::Node& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n.symbol) return single({i}, field.one());
    if (auto s = detail::scalar_symbol(n.symbol, field)) return single({}, *s);
    throw InvalidPresentation("unknown variable '" + n.symbol + "' in relation");
  }
  detail::FreeSum negate(detail::FreeSum a) const {
    for (auto& [w, c] : a) c = -c;
    return a;
  }
  detail::FreeSum add(detail::FreeSum a, const detail::FreeSum& b) const {
    for (const auto& [w, c] : b) {
      auto [it, inserted] = a.emplace(w, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
      }
    }
    return a;
  }
  detail::FreeSum sub(const detail::FreeSum& a, const detail::FreeSum& b) const { return add(a, negate(b)); }
  detail::FreeSum mul(const detail::FreeSum& a, const detail::FreeSum& b) const {
    detail::FreeSum out;
    for (const auto& [u, cu] : a) {
      for (const auto& [v, cv] : b) {
        // u * cv = sigma^u(cv) * u
        Scalar twisted = cv;
        for (auto it = u.rbegin(); it != u.rend(); ++it) twisted = apply_automorphism(sigma[*it], twisted);
        std::vector<std::size_t> w = u;
        w.insert(w.end(), v.begin(), v.end());
        out = add(std::move(out), single(w, cu * twisted));
      }
    }
    return out;
  }
  detail::FreeSum divide(const detail::FreeSum& a, const detail::FreeSum& b, const expr::Node& n) const {
    if (b.size() != 1 || !b.begin()->first.empty()) throw ParseError("division by a non-scalar", n.position);
    return mul(a, single({}, b.begin()->second.inverse()));
  }
  detail::FreeSum power(const detail::FreeSum& a, unsigned long e) const {
    detail::FreeSum r = single({}, field.one());
    for (unsigned long k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }
};

}  // namespace

detail::FreeSum detail::parse_free(std::string_view text, const Field& field, const std::vector<std::string>& names,
                                   const std::vector<AutomorphismSpec>& sigma) {
  auto tree = expr::parse(text);
  FreeOps ops{field, names, sigma};
  return evaluate(*tree, ops);
}

Scalar parse_scalar(std::string_view text, const Field& field) {
  auto tree = expr::parse(text);
  ScalarOps ops{field};
  return detail::evaluate(*tree, ops);
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  auto tree = expr::parse(text);
  PolynomialOps ops{ring};
  return detail::evaluate(*tree, ops);
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& item : expr::split_top_level(text)) out.push_back(parse_polynomial(item, ring));
  return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text, const Field& field) {
  std::vector<Scalar> out;
  for (const auto& item : expr::split_top_level(text)) out.push_back(parse_scalar(item, field));
  return out;
}

std::string coefficient_string(const Scalar& c) {
  if (c.field().spec().kind == FieldKind::PrimeField || c.is_rational()) return c.to_string();
  return "(" + c.to_string() + ")";
}

std::string monomial_string(const Exponent& alpha, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s.empty() ? "1" : s;
}

std::string detail::format_terms(const std::vector<std::pair<Scalar, std::string>>& terms) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    bool negative = false;
    std::string mag;
    const bool prime = c.field().spec().kind == FieldKind::PrimeField;
    if (!prime && c.is_rational()) {
      const mpq_class q = c.rational_value();
      negative = sgn(q) < 0;
      mag = mpq_class(abs(q)).get_str();
    } else {
      mag = coefficient_string(c);
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << mag;
    } else if (mag == "1") {
      out << mono;
    } else {
      out << mag << "*" << mono;
    }
  }
  return first ? "0" : out.str();
}

}  // namespace skewpbw
