// Python bindings: algebras are loaded from presentation text or files and
// polynomials are entered in the text grammar.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "skewpbw/geometry.hpp"
#include "skewpbw/groebner.hpp"
#include "skewpbw/normality.hpp"
#include "skewpbw/nullstellensatz.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/text.hpp"

namespace py = pybind11;
using namespace skewpbw;

namespace {

// Rings are shared_ptr<const Ring>; pybind11 holders need a mutable pointee.
struct PyRing {
  RingPtr ring;

  Polynomial parse(const std::string& text) const { return parse_polynomial(text, ring); }
  std::vector<Polynomial> parse_list(const std::string& text) const { return parse_polynomial_list(text, ring); }
  Point point(const std::string& text) const { return parse_scalar_list(text, ring->field()); }
};

PyRing make_ring(const Presentation& p, const std::string& order) {
  return {Ring::create(p, parse_order(order, p.names()))};
}

std::vector<std::string> strings(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

Budget budget(std::uint32_t degree, std::size_t pairs) {
  Budget b;
  b.max_degree = degree;
  b.max_pairs = pairs;
  return b;
}

}  // namespace

PYBIND11_MODULE(skewpbw, m) {
  m.doc() = "Computations in skew PBW extensions over exact fields";

  // Registered base first: translators are tried newest first.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvalidPresentation>(m, "InvalidPresentation", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", error.ptr());

  py::class_<Presentation>(m, "Presentation")
      .def_property_readonly("names", &Presentation::names)
      .def_property_readonly("field", [](const Presentation& p) { return p.field().spec().to_string(); })
      .def("digest", &Presentation::digest)
      .def("serialize", &Presentation::serialize)
      .def("consistent", [](const Presentation& p, unsigned degree) { return check_pbw_consistency(p, degree).consistent; },
           py::arg("degree") = 4)
      .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; });

  m.def("parse_presentation", [](const std::string& text) { return parse_presentation(text); });
  m.def("load_presentation", &load_presentation);

  py::class_<Polynomial>(m, "Polynomial")
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.to_string() + "')"; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", [](const Polynomial& a, unsigned k) { return a.pow(k); })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("is_zero", &Polynomial::is_zero)
      .def_property_readonly("degree", &Polynomial::degree);

  py::class_<PyRing>(m, "Ring")
      .def(py::init(&make_ring), py::arg("presentation"), py::arg("order") = "deglex")
      .def_property_readonly("presentation", [](const PyRing& r) { return r.ring->presentation(); })
      .def("__call__", &PyRing::parse, py::arg("text"))
      .def("parse", &PyRing::parse)
      .def("parse_list", &PyRing::parse_list)
      .def("divide",
           [](const PyRing& r, const std::string& f, const std::string& divisors) {
             const auto d = divide(r.parse(f), r.parse_list(divisors));
             return py::make_tuple(strings(d.quotients), d.remainder.to_string());
           })
      .def(
          "groebner",
          [](const PyRing& r, const std::string& gens, bool two_sided, std::uint32_t degree, std::size_t pairs) {
            const auto b = budget(degree, pairs);
            const auto h = two_sided ? two_sided_saturate(r.parse_list(gens), b) : left_groebner(r.parse_list(gens), b);
            return py::make_tuple(to_string(h.status), strings(h.basis.elements));
          },
          py::arg("gens"), py::arg("two_sided") = false, py::arg("budget_degree") = Budget{}.max_degree,
          py::arg("budget_pairs") = Budget{}.max_pairs)
      .def(
          "member",
          [](const PyRing& r, const std::string& f, const std::string& gens, bool two_sided) {
            const auto g = r.parse_list(gens);
            const auto h = two_sided ? two_sided_saturate(g) : left_groebner(g);
            return to_string(is_member_left(r.parse(f), h));
          },
          py::arg("f"), py::arg("gens"), py::arg("two_sided") = false)
      .def("is_root",
           [](const PyRing& r, const std::string& f, const std::string& z) {
             return to_string(is_root(r.parse(f), r.point(z)));
           })
      .def("point_ideal",
           [](const PyRing& r, const std::string& z) {
             const auto p = point_ideal(r.ring, r.point(z));
             return py::make_tuple(to_string(p.handle.status), strings(p.handle.basis.elements));
           })
      .def(
          "vanishing_set",
          [](const PyRing& r, const std::string& gens, const std::string& domain) {
            PointIdealCache cache(r.ring);
            const auto V = vanishing_set(r.parse_list(gens), parse_domain(domain, r.ring->field(), r.ring->size()), cache);
            std::vector<std::string> out;
            for (const auto& z : V.points) out.push_back(point_string(z));
            return out;
          },
          py::arg("gens"), py::arg("domain") = "grid:-2..2")
      .def("center", [](const PyRing& r) { return strings(center_generators(r.ring).generators); })
      .def(
          "is_normal", [](const PyRing& r, const std::string& f) { return to_string(is_normal(r.parse(f)).status); },
          py::arg("f"));
}
