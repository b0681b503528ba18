#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repsense/bwt.hpp"
#include "repsense/families.hpp"
#include "repsense/measures.hpp"
#include "repsense/records.hpp"
#include "repsense/relations.hpp"
#include "repsense/sensitivity.hpp"

namespace py = pybind11;
using namespace repsense;

namespace {

// str -> one symbol per byte, sequence of ints -> as given
Text to_text(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Text::from_bytes(o.cast<std::string>());
  if (py::isinstance<py::bytes>(o)) return Text::from_bytes(std::string(o.cast<py::bytes>()));
  return Text(o.cast<std::vector<Symbol>>());
}

py::tuple rational(const Rational& r) { return py::make_tuple(r.num(), r.den()); }

Limits limits(const std::string& spec) { return spec.empty() ? Limits::from_env() : Limits::parse(spec, Limits::from_env()); }

EditOp edit_from(const std::string& kind, std::size_t pos, Symbol sym) {
  switch (parse_edit_kind(kind)) {
    case EditKind::Sub: return EditOp::sub(pos, sym);
    case EditKind::Ins: return EditOp::ins(pos, sym);
    default: return EditOp::del(pos);
  }
}

AlphabetPolicy policy_from(const py::object& o) {
  if (o.is_none()) return AlphabetPolicy::extend_by_fresh(1);
  if (py::isinstance<py::int_>(o)) return AlphabetPolicy::extend_by_fresh(o.cast<int>());
  return AlphabetPolicy::fixed(o.cast<std::vector<Symbol>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "RepsenseError", PyExc_ValueError);

  m.def("measure_ids", [] {
    std::vector<std::string> v;
    for (auto& i : measures()) v.push_back(i.id);
    return v;
  });
  m.def(
      "evaluate",
      [](const std::string& id, const py::object& t, const std::string& lim) {
        auto v = evaluate(id, to_text(t), limits(lim));
        return py::make_tuple(rational(v.value), v.conclusive);
      },
      py::arg("measure"), py::arg("text"), py::arg("limits") = "");
  m.def(
      "apply_edit",
      [](const py::object& t, const std::string& kind, std::size_t pos, Symbol sym) {
        return apply_edit(to_text(t), edit_from(kind, pos, sym)).symbols();
      },
      py::arg("text"), py::arg("kind"), py::arg("pos"), py::arg("sym") = 0);
  m.def("bwt", [](const py::object& t) {
    auto r = bwt(to_text(t));
    return py::make_tuple(r.bwt.symbols(), r.r);
  });
  m.def(
      "sensitivity",
      [](const std::string& id, const py::object& t, const std::string& kind, const py::object& pol,
         const std::string& lim) {
        SensitivityReport r;
        {
          py::gil_scoped_release nogil;
          r = sensitivity(id, to_text(t), parse_edit_kind(kind), policy_from(pol), limits(lim));
        }
        return records::emit(r);
      },
      py::arg("measure"), py::arg("text"), py::arg("kind"), py::arg("policy") = py::none(), py::arg("limits") = "");
  m.def(
      "global_worst",
      [](const std::string& id, std::size_t n, int sigma, const std::string& kind, bool fresh, int jobs,
         const std::string& lim) {
        SweepOptions opt;
        opt.fresh = fresh;
        opt.jobs = jobs;
        opt.limits = limits(lim);
        py::gil_scoped_release nogil;
        return records::emit(global_worst(id, n, sigma, parse_edit_kind(kind), opt));
      },
      py::arg("measure"), py::arg("n"), py::arg("sigma"), py::arg("kind"), py::arg("fresh") = true,
      py::arg("jobs") = 1, py::arg("limits") = "");
  m.def("family_ids", [] {
    std::vector<std::string> v;
    for (auto& f : families::catalog()) v.push_back(f.id);
    return v;
  });
  m.def(
      "family",
      [](const std::string& id, const families::Params& p) {
        auto inst = families::generate(id, p);
        return py::make_tuple(inst.t.symbols(), inst.t_edited().symbols(), to_string(inst.edit.kind), inst.edit.pos,
                              inst.edit.sym);
      },
      py::arg("id"), py::arg("params") = families::Params{});
  m.def(
      "verify_family",
      [](const std::string& id, const families::Params& p, const std::string& lim) {
        auto inst = families::generate(id, p);
        py::gil_scoped_release nogil;
        return records::emit(families::verify(inst, limits(lim)));
      },
      py::arg("id"), py::arg("params") = families::Params{}, py::arg("limits") = "");
  m.def(
      "check_relations",
      [](const py::object& t, const std::string& lim) { return records::emit(check_relations(to_text(t), limits(lim))); },
      py::arg("text"), py::arg("limits") = "");
}
