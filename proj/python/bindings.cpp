#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordalg/assignment.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/decomposition.hpp"
#include "ordalg/dsl.hpp"
#include "ordalg/error.hpp"
#include "ordalg/fixtures.hpp"
#include "ordalg/json_io.hpp"
#include "ordalg/pc_structures.hpp"
#include "ordalg/search.hpp"

namespace py = pybind11;
using namespace ordalg;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Profile profile_of(const std::string& name) {
  auto p = parse_profile(name);
  if (!p) throw Error(ErrorCode::invalid_argument, "unknown profile '" + name + "'");
  return *p;
}

PcKind kind_of(const std::string& name) {
  auto k = parse_pc_kind(name);
  if (!k) throw Error(ErrorCode::invalid_argument, "unknown class '" + name + "'");
  return *k;
}

}  // namespace

PYBIND11_MODULE(_ordalg, m) {
  m.doc() = "Pseudocomplemented posets and their assigned algebras";

  static py::handle error = py::exception<Error>(m, "OrdalgError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Poset>(m, "Poset")
      .def(py::init([](std::vector<std::string> labels, std::vector<LabelPair> order) {
             return Poset::build(std::move(labels), order);
           }),
           py::arg("labels"), py::arg("order"))
      .def_property_readonly("labels", &Poset::labels)
      .def("__len__", &Poset::size)
      .def("leq", [](const Poset& p, const std::string& a, const std::string& b) {
        return p.leq(p.index_of(a), p.index_of(b));
      })
      .def("covers", [](const Poset& p) {
        std::vector<LabelPair> out;
        for (auto [a, b] : p.covers()) out.emplace_back(p.label(a), p.label(b));
        return out;
      })
      .def("to_json", [](const Poset& p) { return to_py(to_json(p)); });

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("labels", &Algebra::labels)
      .def("__len__", &Algebra::size)
      .def("symbols", [](const Algebra& a) {
        std::vector<std::string> out;
        for (const auto& op : a.operations()) out.push_back(op.symbol());
        return out;
      })
      .def("apply", [](const Algebra& a, const std::string& symbol, const std::vector<std::string>& args) {
        std::vector<Element> xs;
        for (const auto& l : args) xs.push_back(a.index_of(l));
        return a.label(a.op(canonical_symbol(symbol)).apply(xs));
      }, py::arg("symbol"), py::arg("args"))
      .def("to_json", [](const Algebra& a) { return to_py(to_json(a)); })
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; });

  m.def("algebra_from_json", [](const std::string& text) {
    return algebra_from_json(Json::parse(text));
  });

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixture_texts()) out.emplace_back(f.name);
    return out;
  });
  m.def("fixture_text", [](const std::string& name) {
    for (const auto& f : fixture_texts())
      if (f.name == name) return std::string(f.text);
    throw Error(ErrorCode::invalid_argument, "unknown fixture '" + name + "'");
  });

  m.def("parse_posets", [](const std::string& text) {
    std::vector<std::pair<std::string, Poset>> out;
    for (auto& p : parse(text).posets) out.emplace_back(p.name, p.poset);
    return out;
  }, "Posets of a DSL document as (name, poset) pairs");
  m.def("load_algebra", [](const std::string& text, const std::string& name) {
    return materialize(parse(text), name);
  }, py::arg("text"), py::arg("name"));
  m.def("canonical_text", [](const std::string& text) { return serialize(parse(text)); },
        "Parse and re-serialize in canonical form");
  m.def("algebra_text", [](const Algebra& a, const std::string& name) { return serialize(document_of(a, name)); });

  m.def("classify", [](const Poset& p, const std::string& cls) { return to_py(to_json(classify(p, kind_of(cls)), p)); });
  m.def("is_distributive", [](const Poset& p) { return to_py(to_json(is_distributive(p), p.labels())); });
  m.def("check", [](const Poset& p, const std::string& atom) { return evaluate_atom(p, atom); },
        "Evaluate a search predicate atom such as 'stone' or 'lattice'");

  m.def("choice_count", [](const Poset& p, const std::string& profile) {
    const Profile pr = profile_of(profile);
    return ChoiceSpace(p, needs_join(pr) ? ChoiceFamily::lambda : ChoiceFamily::meet).count();
  });
  m.def("assign", [](const Poset& p, const std::string& profile, std::uint64_t index) {
    const Profile pr = profile_of(profile);
    const ChoiceSpace space(p, needs_join(pr) ? ChoiceFamily::lambda : ChoiceFamily::meet);
    return assign_algebra(p, pr, space.decode(index));
  }, py::arg("poset"), py::arg("profile"), py::arg("index") = 0);
  m.def("verify_conditions", [](const Algebra& a, const std::string& profile) {
    return to_py(to_json(verify_assigned_conditions(a, profile_of(profile)), a.labels()));
  });
  m.def("audit", [](const Poset& p, const std::string& profile, std::uint64_t budget, std::uint64_t seed) {
    AuditOptions o;
    o.budget = budget;
    o.seed = seed;
    return to_py(to_json(theorem_equivalence_audit(p, profile_of(profile), o)));
  }, py::arg("poset"), py::arg("profile"), py::arg("budget") = 10'000, py::arg("seed") = AuditOptions{}.seed);

  m.def("congruences", [](const Algebra& a) {
    return to_py(to_json(congruence_lattice(a), a.labels()));
  });
  m.def("congruence_properties", [](const Algebra& a, std::optional<std::string> unit) {
    std::optional<Element> u;
    if (unit) u = a.index_of(*unit);
    return to_py(to_json(congruence_properties(a, u)));
  }, py::arg("algebra"), py::arg("unit") = py::none());
  m.def("term_conditions", [](const Algebra& a, const std::string& profile) {
    return to_py(to_json(verify_term_conditions(a, profile_of(profile)), a.labels()));
  });

  m.def("product", &direct_product);
  m.def("decompose", [](const Algebra& a) { return to_py(to_json(decompose(a), a.labels())); });
  m.def("isomorphic", [](const Algebra& a, const Algebra& b) { return find_isomorphism(a, b).has_value(); });

  m.def("search", [](std::size_t lo, std::size_t hi, const std::string& where, std::size_t limit) {
    SearchSpec s;
    s.min_size = lo;
    s.max_size = hi;
    s.where = Predicate::parse(where);
    s.limit = limit;
    return search(s).hits;
  }, py::arg("min_size"), py::arg("max_size"), py::arg("where"), py::arg("limit") = 0);
}
