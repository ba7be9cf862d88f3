#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmrees/registry.hpp"
#include "cmrees/report.hpp"

namespace py = pybind11;
using namespace cmrees;

namespace {

FamilyPartition families_from(const GroupPtr& g, const py::object& fam) {
  if (fam.is_none()) return discrete_partition(g);
  return parse_family_partition(g, py::cast<std::string>(fam));
}

py::dict group_info(const std::string& spec) {
  GroupPtr g = resolve_group(spec);
  py::dict d;
  d["name"] = g->name();
  d["order"] = (long)g->size();
  d["dim"] = g->dim();
  d["reflection_count"] = g->reflection_count();
  d["invariant_degrees"] = g->invariant_degrees();
  d["class_count"] = (int)g->classes().size();
  d["conductor"] = g->conductor();
  return d;
}

std::string run_suite_json(const std::string& suite, const py::object& group, int order,
                           const py::object& families) {
  if (suite == "theorem-b") return render_json(run_theorem_b_suite(order ? order : 8));
  GroupPtr g = resolve_group(py::cast<std::string>(group));
  int n = order ? order : default_hbar_order(g);
  if (suite == "chartab") return render_json(run_chartab_suite(g));
  if (suite == "identities") return render_json(run_identity_suite(g, n));
  if (suite == "theorem-a") return render_json(run_theorem_a_suite(g, n));
  if (suite == "conjecture")
    return render_json(run_conjecture_suite(g, families_from(g, families)));
  throw std::invalid_argument("unknown suite: " + suite);
}

int weighted_degree_py(const std::vector<std::pair<std::pair<long, long>, std::vector<int>>>& poly,
                       const std::vector<int>& weights) {
  std::vector<Monomial> mono;
  for (const auto& [coeff, exps] : poly) mono.push_back({Rat(coeff.first, coeff.second), exps});
  return weighted_degree(mono, weights);
}

}  // namespace

PYBIND11_MODULE(_cmrees, m) {
  m.doc() = "Exact Chern-character image lattices for complex reflection groups";

  m.def("group_info", &group_info, py::arg("group"),
        "Basic invariants for a registry group name or group definition file path.");
  m.def("group_names", &registry_names, "Built-in registry group names.");
  m.def(
      "character_table_tsv",
      [](const std::string& group) { return render_table_tsv(*character_table(resolve_group(group))); },
      py::arg("group"));
  m.def(
      "filtration_dims",
      [](const std::string& group) { return filtration(resolve_group(group)).dims; },
      py::arg("group"));
  m.def(
      "theorem_a_dims",
      [](const std::string& group, int order) {
        GroupPtr g = resolve_group(group);
        auto rep = verify_theorem_a(g, order ? order : default_hbar_order(g));
        return py::make_tuple(rep.dims_image, rep.dims_rees, rep.equal);
      },
      py::arg("group"), py::arg("order") = 0);
  m.def("run_suite_json", &run_suite_json, py::arg("suite"), py::arg("group") = py::none(),
        py::arg("order") = 0, py::arg("families") = py::none(),
        "Run a verification suite and return the JSON report text.");
  m.def("weighted_degree", &weighted_degree_py, py::arg("poly"), py::arg("weights"),
        "Weighted degree of a weighted-homogeneous polynomial given as "
        "[((num, den), [exponents]), ...].");
}
