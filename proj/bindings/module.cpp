#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gracetree/cli.hpp"
#include "gracetree/io.hpp"
#include "gracetree/oracle.hpp"

namespace py = pybind11;
using namespace gracetree;

namespace {

RootedTree tree_of(const std::string& expr) { return expr_to_tree(parse_tree_expr(expr)); }

py::dict classify_py(const std::string& expr) {
  Classification c = classify_tree(tree_of(expr));
  py::dict out;
  py::list classes;
  for (ClassId cls : {ClassId::A, ClassId::B, ClassId::C, ClassId::D, ClassId::E})
    if (c.has(cls)) classes.append(std::string(1, class_letter(cls)));
  out["classes"] = classes;
  out["depth"] = c.depth;
  out["diameter"] = c.diameter;
  out["even_children_at_rm1"] = c.even_children_at_rm1;
  py::dict excluded;
  for (const auto& [cls, why] : c.excluded)
    excluded[py::str(std::string(1, class_letter(cls)))] = why;
  out["excluded"] = excluded;
  return out;
}

py::dict label_py(const std::string& expr, const std::string& cls) {
  RootedTree t = tree_of(expr);
  LabelResult res = [&] {
    if (cls == "auto") return dispatch_label(t);
    switch (class_from_letter(cls.at(0))) {
      case ClassId::A: return label_class_a(t);
      case ClassId::B: return label_class_b(t);
      case ClassId::C: return label_class_c(t);
      case ClassId::D: return label_class_d(t);
      default: return label_class_e(t);
    }
  }();
  py::dict out;
  out["labels"] = res.labeling.label;
  out["root_label"] = res.labeling[t.root];
  out["graceful"] = verify_graceful(t, res.labeling).graceful;
  out["json"] = to_json(res.trace.final_state);
  out["trace"] = format_trace(res.trace);
  out["arranged"] = to_string(res.trace.arranged);
  return out;
}

py::dict verify_py(const std::string& json_text) {
  auto [t, f] = from_json(json_text);
  VerifyReport rep = verify_graceful(t, f);
  py::dict out;
  out["graceful"] = rep.graceful;
  py::list violations;
  for (const auto& v : rep.violations) {
    const char* kind = "";
    switch (v.kind) {
      case Violation::Kind::DuplicateVertexLabel: kind = "duplicate-vertex-label"; break;
      case Violation::Kind::LabelOutOfRange: kind = "label-out-of-range"; break;
      case Violation::Kind::DuplicateEdgeLabel: kind = "duplicate-edge-label"; break;
      case Violation::Kind::MissingVertexLabel: kind = "missing-vertex-label"; break;
    }
    py::dict item;
    item["kind"] = kind;
    item["witnesses"] = v.witnesses;
    violations.append(item);
  }
  out["violations"] = violations;
  return out;
}

std::string replay_py(int star_n, const std::string& script_text) {
  return to_json(replay_script(star_state(star_n), parse_script(script_text)));
}

py::object oracle_py(const std::string& expr, py::object root_label, std::uint64_t max_nodes) {
  SearchBudget budget;
  budget.max_nodes = max_nodes;
  std::optional<int> fixed;
  if (!root_label.is_none()) fixed = root_label.cast<int>();
  auto res = brute_force_graceful(tree_of(expr), fixed, budget);
  if (res.status == SearchStatus::Found) return py::cast(res.labeling->label);
  if (res.status == SearchStatus::Exhausted) return py::none();
  throw std::runtime_error("search budget exhausted");
}

std::vector<std::string> enumerate_class_py(const std::string& cls, int max_n) {
  std::vector<std::string> out;
  for (const auto& t : enumerate_class({class_from_letter(cls.at(0)), max_n}))
    out.push_back(to_string(tree_to_expr(t)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_gracetree, m) {
  m.doc() = "graceful labelings of odd-children trees via leaf transfers";
  m.def("parse", [](const std::string& s) { return to_string(parse_tree_expr(s)); },
        "parse a tree expression and return its canonical text", py::arg("expr"));
  m.def("size", [](const std::string& s) { return expr_size(parse_tree_expr(s)); },
        py::arg("expr"));
  m.def("canonical_code", [](const std::string& s) { return canonical_code(tree_of(s)); },
        py::arg("expr"));
  m.def("classify", &classify_py, py::arg("expr"));
  m.def("label", &label_py, py::arg("expr"), py::arg("cls") = "auto");
  m.def("verify_json", &verify_py, py::arg("json"));
  m.def("replay", &replay_py, py::arg("star"), py::arg("script"));
  m.def("oracle_label", &oracle_py, py::arg("expr"), py::arg("root_label") = py::none(),
        py::arg("max_nodes") = 50'000'000);
  m.def("enumerate_class", &enumerate_class_py, py::arg("cls"), py::arg("max_n"));
  m.def("run_cli", &run_cli, py::arg("args"));
}
