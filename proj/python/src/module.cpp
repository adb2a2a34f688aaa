#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hallkit/report.hpp"
#include "hallkit/search.hpp"
#include "hallkit/zoo.hpp"

namespace py = pybind11;
using namespace hallkit;

namespace {

Budget make_budget(std::uint64_t nodes, std::uint64_t order) {
  Budget b;
  b.node_limit = nodes;
  b.order_limit = order;
  return b;
}

PermGroup from_lists(std::size_t degree, const std::vector<std::vector<Point>>& gens) {
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    if (g.size() != degree) throw std::invalid_argument("generator of the wrong degree");
    perms.emplace_back(g);
  }
  return PermGroup(degree, std::move(perms));
}

std::vector<std::vector<Point>> to_lists(const PermGroup& g) {
  std::vector<std::vector<Point>> out;
  for (const auto& x : g.generators()) out.emplace_back(x.images().begin(), x.images().end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hall subgroups of permutation groups";
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  const Budget defaults;

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init(&from_lists), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", [](const PermGroup& g) { return py::int_(py::str(to_string(g.order()))); })
      .def_property_readonly("generators", &to_lists)
      .def("contains", py::overload_cast<const PermGroup&>(&PermGroup::contains, py::const_))
      .def("__eq__", [](const PermGroup& a, const PermGroup& b) { return a == b; })
      .def("__repr__", [](const PermGroup& g) {
        return "<PermGroup degree=" + std::to_string(g.degree()) + " order=" + to_string(g.order()) + ">";
      });

  m.def("zoo_names", &zoo_names);
  m.def("zoo_group", [](const std::string& name) {
    auto g = zoo_group(name);
    if (!g) throw py::key_error(name);
    return *g;
  });

  m.def(
      "analyze",
      [](const PermGroup& g, const std::string& pi, std::uint64_t seed, std::uint64_t nodes, std::uint64_t order) {
        Budget b = make_budget(nodes, order);
        return ecd_json(classify_ECD(g, PiSet::parse(pi), b, seed)).dump();
      },
      py::arg("group"), py::arg("pi"), py::arg("seed") = 1, py::arg("node_limit") = defaults.node_limit,
      py::arg("order_limit") = defaults.order_limit);

  m.def(
      "reduce",
      [](const PermGroup& g, const std::string& pi, bool compare, std::uint64_t seed, std::uint64_t nodes,
         std::uint64_t order) {
        Budget b = make_budget(nodes, order);
        ReductionOptions opts;
        opts.seed = seed;
        Json j;
        if (compare) {
          auto c = compare_with_oracle(g, PiSet::parse(pi), b, opts);
          j["verdict"] = verdict_json(c.trace.verdict);
          j["trace"] = trace_json(c.trace);
          j["comparison"] = comparison_json(c);
        } else {
          auto t = cpi_reduce(g, PiSet::parse(pi), b, opts);
          j["verdict"] = verdict_json(t.verdict);
          j["trace"] = trace_json(t);
        }
        return j.dump();
      },
      py::arg("group"), py::arg("pi"), py::arg("compare_oracle") = false, py::arg("seed") = 1,
      py::arg("node_limit") = defaults.node_limit, py::arg("order_limit") = defaults.order_limit);

  m.def(
      "k_induced",
      [](const PermGroup& g, const PermGroup& a, const std::string& pi, std::uint64_t seed) {
        if (!is_normal(g, a)) throw std::invalid_argument("subgroup is not normal");
        Budget b;
        return k_report_json(k_induced(g, a, PiSet::parse(pi), b, seed)).dump();
      },
      py::arg("group"), py::arg("normal"), py::arg("pi"), py::arg("seed") = 1);

  m.def(
      "find_hall",
      [](const PermGroup& g, const std::string& pi, std::uint64_t seed) {
        Budget b;
        return find_hall(g, PiSet::parse(pi), b, seed);
      },
      py::arg("group"), py::arg("pi"), py::arg("seed") = 1);

  m.def("example_gl52", [] {
    Budget b;
    return gl52_json(run_gl52_example(b)).dump();
  });

  m.def(
      "run_corpus",
      [](const std::string& manifest, std::size_t jobs, std::uint64_t seed) {
        py::gil_scoped_release release;
        return corpus_json(run_corpus(read_manifest(manifest), Budget{}, seed, jobs)).dump();
      },
      py::arg("manifest"), py::arg("jobs") = 1, py::arg("seed") = 1);

  m.def("replay_trace", [](const std::string& trace) { return replay_trace(Json::parse(trace)); });
}
