#include "skewpbw/presentation.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "skewpbw/expression.hpp"
#include "skewpbw/text.hpp"
#include "text_internal.hpp"

namespace skewpbw {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool valid_identifier(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

Relation commuting_relation(const Field& field, std::size_t n) {
  return Relation{field.one(), std::vector<Scalar>(n, field.zero()), field.zero()};
}

}  // namespace

bool Relation::has_lower_terms() const {
  if (!constant.is_zero()) return true;
  for (const auto& a : linear)
    if (!a.is_zero()) return true;
  return false;
}

Presentation::Presentation(const Field& field, std::vector<std::string> names)
    : field_(&field), names_(std::move(names)) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_identifier(names_[i])) throw InvalidPresentation("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InvalidPresentation("duplicate variable name '" + names_[i] + "'");
  }
  sigma_.assign(n, AutomorphismSpec::identity());
  sigma_trivial_.assign(n, true);
  relations_.assign(n * (n - (n ? 1 : 0)) / 2, commuting_relation(field, n));
}

std::size_t Presentation::pair_index(std::size_t i, std::size_t j) const {
  if (!(i < j && j < names_.size()))
    throw InvalidArgument("relation pair must satisfy i < j < n (got " + std::to_string(i) + ", " + std::to_string(j) + ")");
  return j * (j - 1) / 2 + i;
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool Presentation::all_sigma_trivial() const noexcept {
  for (bool t : sigma_trivial_)
    if (!t) return false;
  return true;
}

const Relation& Presentation::relation(std::size_t i, std::size_t j) const { return relations_[pair_index(i, j)]; }

void Presentation::set_sigma(std::size_t i, const AutomorphismSpec& sigma) {
  try {
    validate_automorphism(sigma, *field_);
  } catch (const InvalidArgument& e) {
    throw InvalidPresentation(std::string("sigma for '") + names_.at(i) + "': " + e.what());
  }
  sigma_.at(i) = sigma;
  sigma_trivial_.at(i) = acts_trivially(sigma, *field_);
}

void Presentation::set_relation(std::size_t i, std::size_t j, Relation relation) {
  const std::size_t idx = pair_index(i, j);
  auto check_field = [&](const Scalar& s) {
    if (&s.field() != field_) throw InvalidPresentation("relation constant " + s.to_string() + " is not in " + field_->spec().to_string());
  };
  check_field(relation.c);
  check_field(relation.constant);
  if (relation.linear.empty()) relation.linear.assign(names_.size(), field_->zero());
  if (relation.linear.size() != names_.size()) throw InvalidPresentation("relation needs one linear coefficient per variable");
  for (const auto& a : relation.linear) check_field(a);
  if (relation.c.is_zero())
    throw InvalidPresentation("relation " + names_[j] + "*" + names_[i] +
                              ": the constant c_ij must be nonzero (skew PBW extensions require invertible c_ij)");
  relations_[idx] = std::move(relation);
}

void Presentation::set_commutation(std::size_t i, std::size_t j, const Scalar& c) {
  set_relation(i, j, Relation{c, {}, field_->zero()});
}

Presentation Presentation::with_central_front(const std::string& name) const {
  std::vector<std::string> names{name};
  names.insert(names.end(), names_.begin(), names_.end());
  Presentation out(*field_, std::move(names));
  for (std::size_t i = 0; i < size(); ++i) out.set_sigma(i + 1, sigma_[i]);
  for (std::size_t j = 0; j < size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = relation(i, j);
      Relation shifted{r.c, {field_->zero()}, r.constant};
      shifted.linear.insert(shifted.linear.end(), r.linear.begin(), r.linear.end());
      out.set_relation(i + 1, j + 1, std::move(shifted));
    }
  }
  return out;
}

std::string Presentation::serialize() const {
  std::ostringstream out;
  out << "field: " << field_->spec().to_string() << "\n";
  out << "vars: ";
  for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? ", " : "") << names_[i];
  out << "\n";
  bool any_sigma = false;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (sigma_[i].kind == AutomorphismKind::Identity) continue;
    out << (any_sigma ? ", " : "sigma: ") << names_[i] << "=" << sigma_[i].to_string();
    any_sigma = true;
  }
  if (any_sigma) out << "\n";
  out << "relations:\n";
  for (std::size_t j = 0; j < names_.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = relation(i, j);
      std::vector<std::pair<Scalar, std::string>> terms;
      terms.emplace_back(r.c, names_[i] + "*" + names_[j]);
      for (std::size_t k = 0; k < names_.size(); ++k)
        if (!r.linear[k].is_zero()) terms.emplace_back(r.linear[k], names_[k]);
      if (!r.constant.is_zero()) terms.emplace_back(r.constant, "");
      out << "  " << names_[j] << "*" << names_[i] << " = " << detail::format_terms(terms) << "\n";
    }
  }
  return out.str();
}

std::string Presentation::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : serialize()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool operator==(const Presentation& a, const Presentation& b) {
  if (a.field_ != b.field_ || a.names_ != b.names_ || a.sigma_ != b.sigma_) return false;
  for (std::size_t k = 0; k < a.relations_.size(); ++k) {
    const Relation& x = a.relations_[k];
    const Relation& y = b.relations_[k];
    if (!(x.c == y.c) || !(x.constant == y.constant) || x.linear.size() != y.linear.size()) return false;
    for (std::size_t l = 0; l < x.linear.size(); ++l)
      if (!(x.linear[l] == y.linear[l])) return false;
  }
  return true;
}

ClassificationFlags classify(const Presentation& p) {
  ClassificationFlags flags;
  flags.quasi_commutative = true;
  flags.bijective = true;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Relation& r = p.relation(i, j);
      if (r.has_lower_terms()) flags.quasi_commutative = false;
      if (r.c.is_zero()) flags.bijective = false;
    }
  }
  // sigma_i are field automorphisms (validated on construction), hence
  // bijective; delta_i vanishes on the coefficient field.
  return flags;
}

Presentation parse_presentation(std::string_view text) {
  std::optional<FieldSpec> field_spec;
  std::vector<std::string> names;
  std::string sigma_line;
  std::vector<std::pair<std::string, std::size_t>> relation_lines;  // text, line number
  bool in_relations = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
    const bool is_key = !key.empty() && valid_identifier(key) && line.find('=') > colon;
    if (is_key && key != "cyclotomic" && key != "gf") {
      const std::string value = trim(line.substr(colon + 1));
      in_relations = false;
      if (key == "field") {
        field_spec = FieldSpec::parse(value);
      } else if (key == "vars") {
        names = expr::split_top_level(value);
      } else if (key == "sigma") {
        sigma_line = value;
      } else if (key == "relations") {
        in_relations = true;
        if (!value.empty()) relation_lines.emplace_back(value, line_no);
      } else if (key == "relation") {
        relation_lines.emplace_back(value, line_no);
      } else {
        throw InvalidPresentation("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
      continue;
    }
    if (!in_relations) throw InvalidPresentation("line " + std::to_string(line_no) + ": unexpected text '" + line + "'");
    relation_lines.emplace_back(line, line_no);
  }
  if (!field_spec) throw InvalidPresentation("missing 'field:' entry");
  if (names.empty()) throw InvalidPresentation("missing 'vars:' entry");

  const Field& field = make_field(*field_spec);
  Presentation p(field, names);

  if (!sigma_line.empty()) {
    const auto items = expr::split_top_level(sigma_line);
    const bool keyed = items.front().find('=') != std::string::npos;
    if (!keyed && items.size() != names.size())
      throw InvalidPresentation("sigma list needs one entry per variable");
    for (std::size_t k = 0; k < items.size(); ++k) {
      std::size_t var = k;
      std::string spec = items[k];
      if (keyed) {
        const auto eq = items[k].find('=');
        if (eq == std::string::npos) throw InvalidPresentation("sigma entry '" + items[k] + "' needs var=automorphism");
        const auto idx = p.index_of(trim(items[k].substr(0, eq)));
        if (!idx) throw InvalidPresentation("sigma for unknown variable '" + trim(items[k].substr(0, eq)) + "'");
        var = *idx;
        spec = trim(items[k].substr(eq + 1));
      }
      try {
        p.set_sigma(var, AutomorphismSpec::parse(spec));
      } catch (const InvalidArgument& e) {
        throw InvalidPresentation(e.what());
      }
    }
  }

  std::vector<std::string> sigma_names;
  std::vector<AutomorphismSpec> sigmas;
  for (std::size_t i = 0; i < p.size(); ++i) sigmas.push_back(p.sigma(i));

  std::vector<bool> seen(p.size() * p.size(), false);
  for (const auto& [line, no] : relation_lines) {
    const auto where = "line " + std::to_string(no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidPresentation(where + "relation needs '='");
    detail::FreeSum lhs, rhs;
    try {
      lhs = detail::parse_free(line.substr(0, eq), field, names, sigmas);
      rhs = detail::parse_free(line.substr(eq + 1), field, names, sigmas);
    } catch (const InvalidPresentation& e) {
      throw InvalidPresentation(where + e.what());
    } catch (const ParseError& e) {
      throw InvalidPresentation(where + e.what());
    }
    if (lhs.size() != 1 || lhs.begin()->first.size() != 2 || !lhs.begin()->second.is_one() ||
        lhs.begin()->first[0] <= lhs.begin()->first[1])
      throw InvalidPresentation(where + "left side must be x_j*x_i with x_j declared after x_i");
    const std::size_t j = lhs.begin()->first[0];
    const std::size_t i = lhs.begin()->first[1];
    if (seen[i * p.size() + j]) throw InvalidPresentation(where + "duplicate relation for " + names[j] + "*" + names[i]);
    seen[i * p.size() + j] = true;
    Relation rel{field.zero(), std::vector<Scalar>(p.size(), field.zero()), field.zero()};
    for (const auto& [word, c] : rhs) {
      if (word.empty()) {
        rel.constant = c;
      } else if (word.size() == 1) {
        rel.linear[word[0]] = c;
      } else if (word.size() == 2 && word[0] == i && word[1] == j) {
        rel.c = c;
      } else {
        throw InvalidPresentation(where + "right side may only contain " + names[i] + "*" + names[j] +
                                  ", single variables and a constant");
      }
    }
    try {
      p.set_relation(i, j, std::move(rel));
    } catch (const InvalidPresentation& e) {
      throw InvalidPresentation(where + e.what());
    }
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace skewpbw
