#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvlm/canonical.hpp"
#include "mvlm/dynamics.hpp"
#include "mvlm/io.hpp"
#include "mvlm/minimize.hpp"
#include "mvlm/normalize.hpp"
#include "mvlm/oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace mvlm;

namespace {

std::size_t resolve(const RegulatoryGraph& g, const std::string& name) {
  auto index = g.component_index(name);
  if (!index) throw DomainError("unknown component '" + name + "'");
  return *index;
}

Edge edge_from(const RegulatoryGraph& g, const py::tuple& t) {
  if (t.size() != 3)
    throw py::value_error("edge must be a (source, threshold, target) tuple");
  return Edge{static_cast<std::uint32_t>(resolve(g, t[0].cast<std::string>())),
              static_cast<std::uint32_t>(resolve(g, t[2].cast<std::string>())),
              t[1].cast<Level>()};
}

py::tuple edge_tuple(const RegulatoryGraph& g, const Edge& e) {
  return py::make_tuple(g.components[e.source].name, e.threshold,
                        g.components[e.target].name);
}

py::tuple state_tuple(const State& s) {
  py::tuple t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i] = s[i];
  return t;
}

Limits make_limits(std::uint64_t max_states, std::uint64_t max_contexts) {
  Limits lim;
  lim.max_states = max_states;
  lim.max_contexts = max_contexts;
  return lim;
}

const std::uint64_t kDefaultMaxStates = Limits{}.max_states;
const std::uint64_t kDefaultMaxContexts = Limits{}.max_contexts;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Multi-valued regulatory network models: asynchronous and synchronous "
      "dynamics, canonical and minimal forms, dynamical equivalence.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<StructuralError>(m, "StructuralError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<ContractError>(m, "ContractError", error);
  py::register_exception<CapacityError>(m, "CapacityError", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<Model>(m, "Model", "A regulatory graph with its parameter tables")
      .def_property_readonly(
          "components",
          [](const Model& mo) {
            py::list out;
            for (const auto& c : mo.graph.components)
              out.append(py::make_tuple(c.name, c.max_level));
            return out;
          },
          "(name, max_level) per component, in declaration order")
      .def_property_readonly(
          "edges",
          [](const Model& mo) {
            py::list out;
            for (const auto& e : mo.graph.edges)
              out.append(edge_tuple(mo.graph, e));
            return out;
          },
          "(source, threshold, target) per edge, in canonical order")
      .def_property_readonly(
          "tables",
          [](const Model& mo) { return mo.params.tables; },
          "per-component parameter values, in context order")
      .def("__eq__",
           [](const Model& a, const Model& b) { return a == b; })
      .def("__str__", [](const Model& mo) { return serialize_model(mo); })
      .def("__repr__", [](const Model& mo) {
        return "<Model: " + std::to_string(mo.graph.components.size()) +
               " components, " + std::to_string(mo.graph.edges.size()) +
               " edges>";
      });

  py::class_<TransitionSystem>(m, "TransitionSystem",
                               "State graph of one update scheme")
      .def_property_readonly(
          "dimensions",
          [](const TransitionSystem& t) { return t.dimensions; })
      .def_property_readonly(
          "transitions",
          [](const TransitionSystem& t) {
            py::list out;
            for (const auto& tr : t.transitions)
              out.append(py::make_tuple(state_tuple(tr.first),
                                        state_tuple(tr.second)));
            return out;
          },
          "sorted (from, to) state pairs")
      .def("__len__",
           [](const TransitionSystem& t) { return t.transitions.size(); })
      .def("__eq__", [](const TransitionSystem& a,
                        const TransitionSystem& b) { return ts_equal(a, b); })
      .def("__str__", [](const TransitionSystem& t) {
        return export_ts(t, TsFormat::Edges);
      });

  m.def("parse", &parse_model, "text"_a,
        "Parse a model document; raises ParseError with line:column");
  m.def("serialize", &serialize_model, "model"_a,
        "Canonical text form, byte-deterministic");
  m.def(
      "validate",
      [](const Model& mo) {
        std::vector<std::string> out;
        for (const auto& d : validate(mo)) out.push_back(to_string(d));
        return out;
      },
      "model"_a, "Structural problems, empty when the model is well formed");

  m.def(
      "async_ts",
      [](const Model& mo, std::uint64_t max_states) {
        return async_ts(mo, make_limits(max_states, kDefaultMaxContexts));
      },
      "model"_a, "max_states"_a = kDefaultMaxStates,
      "Asynchronous transition system: one component steps at a time");
  m.def(
      "sync_ts",
      [](const Model& mo, std::uint64_t max_states) {
        return sync_ts(mo, make_limits(max_states, kDefaultMaxContexts));
      },
      "model"_a, "max_states"_a = kDefaultMaxStates,
      "Synchronous transition system: every component steps at once");
  m.def("ts_equal", &ts_equal, "a"_a, "b"_a);
  m.def(
      "export_ts",
      [](const TransitionSystem& t, const std::string& format) {
        if (format == "edges") return export_ts(t, TsFormat::Edges);
        if (format == "dot") return export_ts(t, TsFormat::Dot);
        throw py::value_error("format must be 'edges' or 'dot'");
      },
      "ts"_a, "format"_a = "edges");

  m.def("is_canonical", &is_canonical, "model"_a,
        "True when every parameter sits within reach of its own context");
  m.def("canonize", &canonize, "model"_a,
        "Clamp every parameter into its context's reachable band");
  m.def("complete_step", [](const Model& mo) { return complete_step(mo); },
        "model"_a, "Add the smallest missing edge, dynamics preserved");
  m.def(
      "complete",
      [](const Model& mo, std::uint64_t max_contexts) {
        return complete(mo, make_limits(Limits{}.max_states, max_contexts));
      },
      "model"_a, "max_contexts"_a = kDefaultMaxContexts,
      "Add every missing edge, dynamics preserved");
  m.def("normalize", &normalize, "model"_a,
        "Replace every parameter by the level the dynamics actually reach");
  m.def("is_normalized", &is_normalized, "model"_a);
  m.def("minimize_step", [](const Model& mo) { return minimize_step(mo); },
        "model"_a,
        "Remove the smallest invisible edge of a normalized model");
  m.def(
      "minimize",
      [](const Model& mo, std::uint64_t max_contexts) {
        return minimize(mo, make_limits(Limits{}.max_states, max_contexts));
      },
      "model"_a, "max_contexts"_a = kDefaultMaxContexts,
      "Normalize, then strip every edge the dynamics cannot see");

  m.def(
      "observable_in_param",
      [](const Model& mo, const py::tuple& edge) {
        return observable_in_param(mo, edge_from(mo.graph, edge));
      },
      "model"_a, "edge"_a);
  m.def(
      "observable_in_ts",
      [](const Model& mo, const py::tuple& edge) {
        return observable_in_ts(mo, edge_from(mo.graph, edge));
      },
      "model"_a, "edge"_a);
  m.def(
      "observability",
      [](const Model& mo) {
        py::list out;
        for (const auto& row : observability_report(mo)) {
          py::tuple e = edge_tuple(mo.graph, row.edge);
          out.append(py::make_tuple(e[0], e[1], e[2], row.in_parametrization,
                                    row.in_transition_system));
        }
        return out;
      },
      "model"_a,
      "(source, threshold, target, in_parametrization, in_transition_system) "
      "per edge");

  m.def(
      "equivalent",
      [](const Model& a, const Model& b, const std::string& method,
         std::uint64_t max_states, std::uint64_t max_contexts) {
        Limits lim = make_limits(max_states, max_contexts);
        if (method == "minimize") return equivalent_by_minimization(a, b, lim);
        if (method == "complete") return equivalent_by_completion(a, b, lim);
        if (method == "ts") {
          if (a.graph.components != b.graph.components)
            throw DomainError(
                "models are over different components and cannot be compared");
          return ts_equal(async_ts(a, lim), async_ts(b, lim));
        }
        throw py::value_error("method must be 'minimize', 'complete' or 'ts'");
      },
      "a"_a, "b"_a, "method"_a = "minimize",
      "max_states"_a = kDefaultMaxStates,
      "max_contexts"_a = kDefaultMaxContexts,
      "True when both models generate the same transition system");

  m.def(
      "contexts",
      [](const Model& mo, const std::string& component) {
        std::size_t v = resolve(mo.graph, component);
        py::list out;
        for (const auto& omega : contexts(mo.graph, v)) {
          py::list box;
          for (const auto& iv : omega.intervals)
            box.append(py::make_tuple(iv.low, iv.high));
          out.append(py::tuple(box));
        }
        return out;
      },
      "model"_a, "component"_a,
      "Every regulatory context as ((low, high), ...) per component");
  m.def(
      "mtv",
      [](const Model& mo, const std::string& component, std::size_t context) {
        std::size_t v = resolve(mo.graph, component);
        auto all = contexts(mo.graph, v);
        if (context >= all.size())
          throw py::value_error("context index out of range");
        return mtv(mo, v, all[context]);
      },
      "model"_a, "component"_a, "context"_a,
      "Level the component drifts to from the given context");

  auto slow = m.def_submodule(
      "oracle", "Slow reference paths used to cross-check the fast ones");
  slow.def(
      "mtv",
      [](const Model& mo, const std::string& component, const State& s) {
        return mvlm::oracle::mtv_oracle(mo, resolve(mo.graph, component), s);
      },
      "model"_a, "component"_a, "state"_a);
  slow.def(
      "ts_observable",
      [](const Model& mo, const py::tuple& edge) {
        return mvlm::oracle::ts_observable_oracle(mo,
                                                  edge_from(mo.graph, edge));
      },
      "model"_a, "edge"_a);
  slow.def(
      "ts_observable_mtv",
      [](const Model& mo, const py::tuple& edge) {
        return mvlm::oracle::ts_observable_oracle_mtv(
            mo, edge_from(mo.graph, edge));
      },
      "model"_a, "edge"_a);
}
