#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "gconj/complex.hpp"
#include "gconj/enumeration.hpp"
#include "gconj/errors.hpp"
#include "gconj/face_ring.hpp"
#include "gconj/field.hpp"
#include "gconj/generators.hpp"
#include "gconj/homology.hpp"
#include "gconj/io.hpp"
#include "gconj/moves.hpp"
#include "gconj/report.hpp"

namespace py = pybind11;
using namespace gconj;

namespace {

// Exact integers go through their decimal form, so big values survive.
py::int_ to_py(const Int& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list to_py(const IntSeq& v) {
  py::list out;
  for (const Int& x : v) out.append(to_py(x));
  return out;
}

IntSeq from_py(const py::sequence& seq) {
  IntSeq out;
  for (const auto& x : seq) out.emplace_back(py::str(x).cast<std::string>());
  return out;
}

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

FaceRingOptions options(std::uint64_t field, int trials, std::uint64_t seed, std::size_t cap) {
  return {make_field(field), trials, seed, cap};
}

#define GCONJ_OPTION_ARGS                                                                       \
  py::arg("field") = FieldSpec::kDefaultPrime, py::arg("trials") = 3, py::arg("seed") = 1, \
  py::arg("cap") = kDefaultMonomialCap

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Face numbers, face rings and bistellar moves of simplicial complexes";

  static py::exception<Error> error(m, "GconjError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Complex>(m, "Complex")
      .def(py::init([](const std::vector<Face>& facets, int n) {
             if (n == 0) {
               for (const Face& f : facets)
                 for (Vertex v : f) n = std::max<int>(n, v);
             }
             return from_facets(n, facets);
           }),
           py::arg("facets"), py::arg("n") = 0)
      .def_property_readonly("n", &Complex::n_vertices)
      .def_property_readonly("facets", &Complex::facets)
      .def_property_readonly("dim", &Complex::dim)
      .def_property_readonly("d", &Complex::d)
      .def_property_readonly("vertices", &Complex::vertices)
      .def("contains", &Complex::contains)
      .def("to_json", [](const Complex& c) { return complex_to_json(c).dump(); })
      .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
      .def("__repr__", [](const Complex& c) {
        return "Complex(n=" + std::to_string(c.n_vertices()) + ", facets=" + std::to_string(c.facets().size()) +
               ", d=" + std::to_string(c.d()) + ")";
      });

  m.def("resolve", &resolve_complex, py::arg("spec"), "File path, '-' or kind[:params]");
  m.def("generate", &generate, py::arg("kind"), py::arg("params") = std::vector<int>{});
  m.def("parse", &parse_complex, py::arg("text"));
  m.def("join", &join);
  m.def("cone", &cone);
  m.def("suspension", &suspension);
  m.def("skeleton", &skeleton);
  m.def("link", &link_in_place, py::arg("c"), py::arg("face"));
  m.def("missing_facets", &missing_facets);

  m.def("f_vector", [](const Complex& c) { return to_py(f_vector(c)); });
  m.def("h_vector", [](const Complex& c) { return to_py(h_vector(c)); });
  m.def("g_vector", [](const Complex& c) { return to_py(g_vector(c)); });
  m.def("h_from_f", [](const py::sequence& f, int d) { return to_py(h_from_f(from_py(f), d)); });
  m.def("f_from_h", [](const py::sequence& h, int d) { return to_py(f_from_h(from_py(h), d)); });
  m.def("pseudo_power", [](const py::object& a, int i) { return to_py(pseudo_power(Int(py::str(a).cast<std::string>()), i)); });
  m.def("is_m_vector", [](const py::sequence& seq) { return is_m_vector(from_py(seq)).ok; });
  m.def("klee_residual", [](const Complex& c) { return to_py(klee_residual(c)); });
  m.def("betti_numbers", [](const Complex& c, std::uint64_t p) { return to_py(betti_numbers(c, make_field(p))); },
        py::arg("c"), py::arg("field") = FieldSpec::kDefaultPrime);

  m.def("analyze", [](const Complex& c, std::uint64_t field, int trials, std::uint64_t seed, std::size_t cap) {
    return to_py(analyze_report(c, options(field, trials, seed, cap)));
  }, py::arg("c"), GCONJ_OPTION_ARGS);
  m.def("verify", [](const Complex& c, const std::vector<std::string>& suites, std::uint64_t field, int trials,
                     std::uint64_t seed, std::size_t cap) {
    return to_py(verify_report(c, suites, options(field, trials, seed, cap)));
  }, py::arg("c"), py::arg("suites") = std::vector<std::string>{}, GCONJ_OPTION_ARGS);
  m.def("lefschetz", [](const Complex& c, const std::string& mode, std::uint64_t field, int trials,
                        std::uint64_t seed, std::size_t cap) {
    return to_py(to_json(lefschetz_test(c, options(field, trials, seed, cap), parse_lefschetz_mode(mode))));
  }, py::arg("c"), py::arg("mode") = "weak", GCONJ_OPTION_ARGS);

  py::class_<BistellarMove>(m, "BistellarMove")
      .def(py::init([](Face a, Face b) { return BistellarMove{std::move(a), std::move(b)}; }), py::arg("A"), py::arg("B"))
      .def_readonly("A", &BistellarMove::A)
      .def_readonly("B", &BistellarMove::B)
      .def_property_readonly("index", &BistellarMove::index)
      .def("__eq__", [](const BistellarMove& a, const BistellarMove& b) { return a == b; })
      .def("__repr__", [](const BistellarMove& mv) {
        return "BistellarMove(A=" + to_string(mv.A) + ", B=" + to_string(mv.B) + ")";
      });

  m.def("valid_moves", &valid_moves);
  m.def("is_valid_move", &is_valid_move);
  m.def("is_critical", &is_critical, py::arg("move"), py::arg("d"));
  m.def("apply_move", &apply_move);
  m.def("inverse", &inverse);
  m.def("link_condition", &link_condition, py::arg("c"), py::arg("edge"));
  m.def("contract_edge", &contract_edge, py::arg("c"), py::arg("edge"));
  m.def("connected_sum", [](const Complex& a, const Complex& b, const Face& s1, const Face& s2) {
    return connected_sum(a, b, s1, s2);
  });
  m.def("glue_facets", [](const Complex& a, const Complex& b, const Face& s1, const Face& s2) {
    return glue_facets(a, b, s1, s2);
  });
  m.def("stacked_sphere", &stacked_sphere, py::arg("d"), py::arg("n"), py::arg("seed") = 1);
  m.def("random_walk", [](const Complex& start, int steps, std::uint64_t seed, bool exclude_critical,
                          std::vector<int> allowed, int max_vertices) {
    WalkPolicy pol;
    pol.exclude_critical = exclude_critical;
    pol.allowed_indices = std::move(allowed);
    pol.max_vertices = max_vertices;
    return to_py(to_json(random_walk(start, steps, seed, pol)));
  }, py::arg("start"), py::arg("steps"), py::arg("seed") = 1, py::arg("exclude_critical") = false,
        py::arg("allowed_indices") = std::vector<int>{}, py::arg("max_vertices") = 0);
}
