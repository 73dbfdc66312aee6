// skewpbw: command line front end. Every subcommand prints one document
// (text or JSON) with the inputs, the presentation digest, a status and the
// result. Exit status: 0 answer, 1 input error, 2 unknown.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skewpbw/error.hpp"
#include "skewpbw/geometry.hpp"
#include "skewpbw/groebner.hpp"
#include "skewpbw/normality.hpp"
#include "skewpbw/nullstellensatz.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/text.hpp"

using namespace skewpbw;
using json = nlohmann::ordered_json;

namespace {

constexpr int kAnswer = 0;
constexpr int kInputError = 1;
constexpr int kUnknown = 2;

struct Options {
  std::string algebra;
  std::string order = "deglex";
  std::uint32_t budget_degree = Budget{}.max_degree;
  std::size_t budget_pairs = Budget{}.max_pairs;
  unsigned max_power = 6;
  std::uint32_t trunc_degree = 3;
  std::string domain = "grid:-2..2";
  std::string format = "text";

  std::string f, g, gens, divisors, point;
  std::vector<std::string> points;
  bool certificates = false;
  bool two_sided = false;
  unsigned slack = 0;
  unsigned degree = 4;
};

struct Output {
  std::string status;
  json result = json::object();
  json certificates;
  int exit_code = kAnswer;
};

json strings(const std::vector<Polynomial>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f.to_string());
  return a;
}

json points_json(const std::vector<Point>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_string(p));
  return a;
}

std::vector<Point> parse_points(const std::string& text, const Field& field, std::size_t n) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto p = parse_scalar_list(item, field);
    if (p.size() != n)
      throw InvalidArgument("point '" + item + "' has " + std::to_string(p.size()) + " coordinates, expected " +
                            std::to_string(n));
    out.push_back(std::move(p));
  }
  if (out.empty()) throw InvalidArgument("no points given");
  return out;
}

int status_exit(IdealStatus s) { return s == IdealStatus::Unknown ? kUnknown : kAnswer; }
int status_exit(Membership m) { return m == Membership::Unknown ? kUnknown : kAnswer; }

void ideal_result(Output& out, const IdealHandle& h) {
  out.status = to_string(h.status);
  out.result["sidedness"] = to_string(h.sidedness);
  out.result["basis"] = strings(h.basis.elements);
  out.result["pairs_processed"] = h.pairs_processed;
  if (!h.diagnostic.empty()) out.result["diagnostic"] = h.diagnostic;
  if (h.basis.cofactors) {
    json rows = json::array();
    for (const auto& row : *h.basis.cofactors) rows.push_back(strings(row));
    out.certificates = {{"cofactors", rows}};
  }
  out.exit_code = status_exit(h.status);
}

class Runner {
 public:
  Runner(const Options& o, std::string command)
      : o_(o), command_(std::move(command)), presentation_(load_presentation(o.algebra)) {
    ring_ = Ring::create(presentation_, parse_order(o.order, presentation_.names()));
    budget_.max_degree = o.budget_degree;
    budget_.max_pairs = o.budget_pairs;
  }

  Output run() {
    Output out;
    if (command_ == "normalize") {
      out.status = "ok";
      out.result["f"] = parse(o_.f).to_string();
    } else if (command_ == "mul") {
      out.status = "ok";
      out.result["product"] = (parse(o_.f) * parse(o_.g)).to_string();
    } else if (command_ == "divide") {
      divide_cmd(out);
    } else if (command_ == "gb") {
      ideal_result(out, left_groebner(list(o_.gens), budget_, o_.certificates));
    } else if (command_ == "member") {
      const auto gens = list(o_.gens);
      const auto h = o_.two_sided ? two_sided_saturate(gens, budget_) : left_groebner(gens, budget_);
      const auto m = is_member_left(parse(o_.f), h);
      out.status = to_string(m);
      out.result["sidedness"] = to_string(h.sidedness);
      out.result["ideal_status"] = to_string(h.status);
      if (m != Membership::Unknown && h.status == IdealStatus::Proper)
        out.result["normal_form"] = normal_form(parse(o_.f), h).to_string();
      out.exit_code = status_exit(m);
    } else if (command_ == "saturate") {
      ideal_result(out, two_sided_saturate(list(o_.gens), budget_));
    } else if (command_ == "root") {
      PointIdealCache cache(ring_, budget_);
      const auto z = point(o_.point);
      const auto m = is_root(parse(o_.f), z, cache);
      out.status = to_string(m);
      out.result["point"] = point_string(z);
      out.result["point_ideal"] = to_string(cache.get(z)->handle.status);
      out.exit_code = status_exit(m);
    } else if (command_ == "vanish") {
      vanish_cmd(out);
    } else if (command_ == "points-ideal") {
      points_ideal_cmd(out);
    } else if (command_ == "witness") {
      PointIdealCache cache(ring_, budget_);
      const auto X = parse_points(joined_points(), ring_->field(), ring_->size());
      const auto w = algebraic_witness(X, cache);
      out.status = w.witness ? (w.verified ? "verified" : "unverified") : "unknown";
      out.result["witness"] = w.witness ? json(w.witness->to_string()) : json(nullptr);
      if (w.witness) {
        json tags = json::array();
        for (const auto& t : classify_hypersurface(*w.witness).names()) tags.push_back(t);
        out.result["tags"] = tags;
      }
      if (!w.diagnostic.empty()) out.result["diagnostic"] = w.diagnostic;
      out.exit_code = w.verified ? kAnswer : kUnknown;
    } else if (command_ == "center") {
      const auto C = center_generators(ring_);
      out.status = C.verified ? "verified" : "unverified";
      out.result["generators"] = strings(C.generators);
      out.result["exponents"] = C.exponents;
      out.result["polynomial_ring"] = C.polynomial_ring;
      if (!C.notes.empty()) out.result["notes"] = C.notes;
      out.exit_code = C.verified ? kAnswer : kUnknown;
    } else if (command_ == "sandwich") {
      sandwich_cmd(out);
    } else if (command_ == "normal") {
      normal_cmd(out);
    } else if (command_ == "consistency") {
      const auto r = check_pbw_consistency(presentation_, o_.degree);
      out.status = r.consistent ? "consistent" : "inconsistent";
      out.result["checked"] = r.checked;
      if (!r.consistent) {
        out.result["failure"] = r.failure;
        out.result["failing_triple"] = r.failing_triple;
      }
    } else {
      throw InvalidArgument("unknown subcommand " + command_);
    }
    return out;
  }

  json document(const Output& out, const json& inputs) const {
    json doc;
    doc["command"] = command_;
    doc["inputs"] = inputs;
    doc["presentation"] = {{"file", o_.algebra}, {"digest", presentation_.digest()}};
    doc["order"] = order_to_string(ring_->order(), presentation_.names());
    doc["status"] = out.status;
    doc["result"] = out.result;
    if (!out.certificates.is_null()) doc["certificates"] = out.certificates;
    return doc;
  }

 private:
  Polynomial parse(const std::string& text) const {
    if (text.empty()) throw InvalidArgument("missing polynomial input");
    return parse_polynomial(text, ring_);
  }
  std::vector<Polynomial> list(const std::string& text) const {
    if (text.empty()) throw InvalidArgument("missing generator list");
    return parse_polynomial_list(text, ring_);
  }
  std::string joined_points() const {
    std::string all;
    for (const auto& p : o_.points) all += p + ";";
    return all;
  }
  Point point(const std::string& text) const { return parse_points(text, ring_->field(), ring_->size()).front(); }

  void divide_cmd(Output& out) {
    const auto f = parse(o_.f);
    const auto F = list(o_.divisors);
    const auto d = divide(f, F);
    Polynomial sum = d.remainder;
    for (std::size_t i = 0; i < F.size(); ++i) sum += d.quotients[i] * F[i];
    const bool verified = sum == f;
    out.status = verified ? "ok" : "identity_failed";
    out.result["quotients"] = strings(d.quotients);
    out.result["remainder"] = d.remainder.to_string();
    out.certificates = {{"identity_verified", verified}};
    if (!verified) out.exit_code = kInputError;
  }

  void vanish_cmd(Output& out) {
    PointIdealCache cache(ring_, budget_);
    const auto S = list(o_.gens);
    const auto D = parse_domain(o_.domain, ring_->field(), ring_->size());
    const auto V = vanishing_set(S, D, cache);
    out.status = V.unknown.empty() ? "ok" : "unknown";
    out.result["domain_size"] = D.size();
    out.result["points"] = points_json(V.points);
    out.result["degenerate"] = points_json(V.degenerate);
    out.result["unknown"] = points_json(V.unknown);
    out.exit_code = V.unknown.empty() ? kAnswer : kUnknown;
  }

  void points_ideal_cmd(Output& out) {
    PointIdealCache cache(ring_, budget_);
    const auto X = parse_points(joined_points(), ring_->field(), ring_->size());
    std::vector<Point> degenerate;
    for (const auto& z : X) {
      const auto st = cache.get(z)->handle.status;
      if (st == IdealStatus::Unknown) {
        out.status = "unknown";
        out.result["unresolved_point"] = point_string(z);
        out.exit_code = kUnknown;
        return;
      }
      if (st == IdealStatus::ImproperUnit) degenerate.push_back(z);
    }
    out.status = "ok";
    out.result["trunc_degree"] = o_.trunc_degree;
    out.result["basis"] = strings(ideal_of_points(X, o_.trunc_degree, cache));
    out.result["degenerate"] = points_json(degenerate);
  }

  void sandwich_cmd(Output& out) {
    const auto C = center_generators(ring_);
    PointIdealCache cache(ring_, budget_);
    const auto I = two_sided_saturate(list(o_.gens), budget_);
    if (I.status == IdealStatus::Unknown) {
      out.status = "unknown";
      out.result["diagnostic"] = I.diagnostic;
      out.exit_code = kUnknown;
      return;
    }
    const auto D = parse_domain(o_.domain, ring_->field(), ring_->size());
    const auto r = verify_sandwich(I, C, D, o_.trunc_degree, o_.max_power, cache);
    out.result["J"] = strings(r.J.central);
    out.result["center_points"] = points_json(r.center_points);
    json gens = json::array();
    for (const auto& g : r.generators) {
      json e;
      e["central"] = g.central.to_string();
      e["lifted"] = g.lifted.to_string();
      e["in_radical_of_J"] = to_string(g.in_radical_of_J);
      e["nilpotency"] = g.nilpotency ? json(*g.nilpotency) : json(nullptr);
      e["vanishes_on_V"] = g.vanishes_on_V;
      if (g.counterexample) e["counterexample"] = point_string(*g.counterexample);
      if (!g.note.empty()) e["note"] = g.note;
      gens.push_back(e);
    }
    out.certificates = {{"generators", gens}};
    out.result["grid_artifacts"] = strings(r.grid_artifacts);
    out.result["variety"] = points_json(r.variety.points);
    out.result["first_inclusion"] = to_string(r.first_inclusion);
    out.result["second_inclusion"] = to_string(r.second_inclusion);
    out.result["notes"] = r.notes;
    const bool settled =
        r.first_inclusion != Verdict::Inconclusive && r.second_inclusion != Verdict::Inconclusive;
    out.status = settled ? "settled" : "inconclusive";
    out.exit_code = settled ? kAnswer : kUnknown;
  }

  void normal_cmd(Output& out) {
    const auto v = is_normal(parse(o_.f), o_.slack);
    out.status = to_string(v.status);
    auto witness = [](const NormalWitness& w) {
      return json{{"direction", w.direction},
                  {"generator", w.generator},
                  {"g", w.g ? json(w.g->to_string()) : json(nullptr)}};
    };
    json ws = json::array();
    for (const auto& w : v.witnesses) ws.push_back(witness(w));
    out.certificates = {{"kind", v.certificate}, {"witnesses", ws}};
    if (v.counter_witness) out.certificates["counter_witness"] = witness(*v.counter_witness);
    if (!v.diagnostic.empty()) out.result["diagnostic"] = v.diagnostic;
    out.exit_code = v.status == NormalStatus::Unknown ? kUnknown : kAnswer;
  }

  const Options& o_;
  std::string command_;
  Presentation presentation_;
  RingPtr ring_;
  Budget budget_;
};

void print_text(const json& value, const std::string& indent, std::ostream& os) {
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      print_text(v, indent + "  ", os);
    } else if (v.is_array()) {
      os << indent << key << ":";
      if (v.empty()) os << " (none)";
      os << "\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          os << indent << "  -\n";
          print_text(e, indent + "    ", os);
        } else {
          os << indent << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in skew PBW extensions over exact fields"};
  app.require_subcommand(1);
  Options o;
  json inputs = json::object();

  struct Spec {
    const char* name;
    const char* help;
    std::vector<std::string> inputs;
  };
  const std::vector<Spec> specs = {
      {"normalize", "normal-order a polynomial", {"f"}},
      {"mul", "multiply f * g", {"f", "g"}},
      {"divide", "left division of f by a list of divisors", {"f", "divisors"}},
      {"gb", "left Groebner basis", {"gens", "certificates"}},
      {"member", "ideal membership", {"f", "gens", "two-sided"}},
      {"saturate", "left basis of the two-sided ideal", {"gens"}},
      {"root", "is the point a root of f", {"f", "point"}},
      {"vanish", "vanishing set on a search domain", {"gens", "domain"}},
      {"points-ideal", "ideal of a finite point set up to a degree", {"points", "trunc-degree"}},
      {"witness", "nonzero polynomial vanishing on a point set", {"points"}},
      {"center", "generators of the center", {}},
      {"sandwich", "Nullstellensatz inclusions for a two-sided ideal", {"gens", "domain", "trunc-degree", "max-power"}},
      {"normal", "normality test", {"f", "slack"}},
      {"consistency", "overlap check of the relations", {"degree"}},
  };

  std::map<std::string, std::function<json()>> getters = {
      {"f", [&] { return json(o.f); }},
      {"g", [&] { return json(o.g); }},
      {"gens", [&] { return json(o.gens); }},
      {"divisors", [&] { return json(o.divisors); }},
      {"point", [&] { return json(o.point); }},
      {"points", [&] { return json(o.points); }},
      {"domain", [&] { return json(o.domain); }},
      {"trunc-degree", [&] { return json(o.trunc_degree); }},
      {"max-power", [&] { return json(o.max_power); }},
      {"certificates", [&] { return json(o.certificates); }},
      {"two-sided", [&] { return json(o.two_sided); }},
      {"slack", [&] { return json(o.slack); }},
      {"degree", [&] { return json(o.degree); }},
  };

  std::vector<CLI::App*> subs;
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--algebra", o.algebra, "presentation file")->required()->check(CLI::ExistingFile);
    sub->add_option("--order", o.order, "deglex | degrevlex | block:<vars>");
    sub->add_option("--budget-degree", o.budget_degree, "degree cap for completion");
    sub->add_option("--budget-pairs", o.budget_pairs, "pair cap for completion");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    for (const auto& in : s.inputs) {
      if (in == "f") sub->add_option("--f", o.f, "polynomial")->required();
      if (in == "g") sub->add_option("--g", o.g, "polynomial")->required();
      if (in == "gens") sub->add_option("--gens", o.gens, "comma-separated generators")->required();
      if (in == "divisors") sub->add_option("--divisors", o.divisors, "comma-separated divisors")->required();
      if (in == "point") sub->add_option("--point", o.point, "coordinates, e.g. 1,0,0")->required();
      if (in == "points") sub->add_option("--points", o.points, "points, separate values or ';'-separated")->required();
      if (in == "domain") sub->add_option("--domain", o.domain, "grid:<spec> | gf");
      if (in == "trunc-degree") sub->add_option("--trunc-degree", o.trunc_degree, "degree bound d");
      if (in == "max-power") sub->add_option("--max-power", o.max_power, "nilpotency bound M");
      if (in == "certificates") sub->add_flag("--certificates", o.certificates, "record cofactors");
      if (in == "two-sided") sub->add_flag("--two-sided", o.two_sided, "test the two-sided ideal");
      if (in == "slack") sub->add_option("--slack", o.slack, "extra witness degree");
      if (in == "degree") sub->add_option("--degree", o.degree, "degree bound for triples");
    }
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kAnswer : kInputError;
  }

  std::size_t chosen = 0;
  while (!subs[chosen]->parsed()) ++chosen;
  const std::string command = specs[chosen].name;
  for (const auto& in : specs[chosen].inputs) inputs[in] = getters.at(in)();

  try {
    Runner runner(o, command);
    const Output out = runner.run();
    const json doc = runner.document(out, inputs);
    if (o.format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      print_text(doc, "", std::cout);
    }
    return out.exit_code;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
