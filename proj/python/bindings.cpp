#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smith/suites.hpp"

namespace py = pybind11;
using namespace smith;

namespace {

Json in(const std::string& text) { return parse_json(text); }
std::string out(const Json& j) { return print_json(j); }

// (ok, failure message)
std::pair<bool, std::string> validate(const std::string& kind, const std::string& text) {
  Json j = in(text);
  Verdict v;
  if (kind == "complex")
    v = validate_complex(complex_from_json(j));
  else if (kind == "map") {
    ChainMap f = map_from_json(j);
    v = validate_complex(f.src());
    if (v.ok()) v = validate_complex(f.dst());
    if (v.ok()) v = validate_map(f);
  } else if (kind == "square")
    v = validate_square(square_from_json(j));
  else if (kind == "dga")
    v = validate_dga(dga_from_json(j));
  else if (kind == "smith")
    v = validate_smith_ideal(smith_from_json(j));
  else if (kind == "module")
    v = validate_smith_module(module_from_json(j));
  else
    throw ParseError(kind, "unknown kind");
  return {v.ok(), v.failure};
}

std::map<int, std::size_t> homology_dims(const std::string& text) {
  HomologyReport h = homology(complex_from_json(in(text)));
  return h.dims;
}

ArrowObject arrow_in(const std::string& text) {
  Json j = in(text);
  return j.is_object() && j.contains("f") ? arrow_from_json(j) : map_from_json(j);
}

std::string generate(const std::string& kind, std::uint64_t seed, std::uint32_t p, std::size_t max_dim, int lo,
                     int hi) {
  SuiteConfig c;
  c.seed = seed;
  c.p = p;
  c.max_dim = max_dim;
  c.lo = lo;
  c.hi = hi;
  check_config(c);
  return out(generate_instance(kind, c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact F_p chain complexes, arrow categories and Smith ideals";

  py::register_exception<Error>(m, "SmithError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("validate", &validate, py::arg("kind"), py::arg("text"));
  m.def("homology", &homology_dims, py::arg("complex"));
  m.def("quotient", [](const std::string& text) {
    SmithIdeal s = smith_from_json(in(text));
    Verdict v = validate_smith_ideal(s);
    if (!v.ok()) throw Error(v.failure);
    return out(to_json(quotient_dga(s).dst));
  });
  m.def("tensor", [](const std::string& f, const std::string& g) {
    return out(arrow_to_json(tensor_arrow(arrow_in(f), arrow_in(g))));
  });
  m.def("pushout_product", [](const std::string& f, const std::string& g) {
    return out(arrow_to_json(pushout_product(arrow_in(f), arrow_in(g)).arrow));
  });
  m.def("coker", [](const std::string& f) { return out(arrow_to_json(coker_arrow(arrow_in(f)))); });
  m.def("generate", &generate, py::arg("kind"), py::arg("seed") = 1, py::arg("p") = 2, py::arg("max_dim") = 3,
        py::arg("lo") = -3, py::arg("hi") = 3);
  m.def("suite_names", &suite_names);
  m.def(
      "run_suites",
      [](const std::string& config) { return out(to_json(run_suites(suite_config_from_json(in(config))))); },
      py::arg("config"));
}
