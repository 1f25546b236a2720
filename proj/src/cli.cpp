#include "gracetree/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "gracetree/io.hpp"
#include "gracetree/oracle.hpp"

namespace gracetree {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

LabelResult label_with(const RootedTree& t, const std::string& cls) {
  if (cls == "auto" || cls.empty()) return dispatch_label(t);
  switch (class_from_letter(cls[0])) {
    case ClassId::A: return label_class_a(t);
    case ClassId::B: return label_class_b(t);
    case ClassId::C: return label_class_c(t);
    case ClassId::D: return label_class_d(t);
    case ClassId::E: return label_class_e(t);
  }
  throw std::runtime_error("unreachable");
}

int cmd_label(const std::string& expr_text, const std::string& cls, const std::string& trace_path,
              const std::string& dot_path, const std::string& json_path) {
  RootedTree t = expr_to_tree(parse_tree_expr(expr_text));
  LabelResult res = label_with(t, cls);
  std::string js = to_json(res.trace.final_state);
  std::cout << js;
  if (!json_path.empty()) spill(json_path, js);
  if (!dot_path.empty()) spill(dot_path, to_dot(res.trace.final_state.tree, res.trace.final_state.f));
  if (!trace_path.empty()) spill(trace_path, format_trace(res.trace));
  return 0;
}

int cmd_verify(const std::string& json_path) {
  auto [t, f] = from_json(slurp(json_path));
  VerifyReport rep = verify_graceful(t, f);
  if (rep.graceful) {
    std::cout << "graceful: " << t.size() << " vertices, root label " << f[t.root] << "\n";
    return 0;
  }
  for (const auto& v : rep.violations) {
    const char* kind = "";
    switch (v.kind) {
      case Violation::Kind::DuplicateVertexLabel: kind = "duplicate-vertex-label"; break;
      case Violation::Kind::LabelOutOfRange: kind = "label-out-of-range"; break;
      case Violation::Kind::DuplicateEdgeLabel: kind = "duplicate-edge-label"; break;
      case Violation::Kind::MissingVertexLabel: kind = "missing-vertex-label"; break;
    }
    std::cerr << kind << ":";
    for (Vertex w : v.witnesses) std::cerr << " v" << w;
    std::cerr << "\n";
  }
  return 1;
}

int cmd_replay(int star_n, const std::string& script_path, const std::string& json_path,
               const std::string& dot_path) {
  TransferScript script = parse_script(slurp(script_path));
  LabeledState s = replay_script(star_state(star_n), script);
  std::string js = to_json(s);
  std::cout << js;
  if (!json_path.empty()) spill(json_path, js);
  if (!dot_path.empty()) spill(dot_path, to_dot(s.tree, s.f));
  return 0;
}

int cmd_classify(const std::string& expr_text) {
  RootedTree t = expr_to_tree(parse_tree_expr(expr_text));
  Classification c = classify_tree(t);
  std::cout << "depth r = " << c.depth << ", diameter = " << c.diameter
            << ", even-children vertices at level r-1 = " << c.even_children_at_rm1 << "\n";
  std::string in;
  for (ClassId cls : {ClassId::A, ClassId::B, ClassId::C, ClassId::D, ClassId::E})
    if (c.has(cls)) in += std::string(in.empty() ? "" : ", ") + class_letter(cls);
  std::cout << "classes: " << (in.empty() ? "(none)" : in) << "\n";
  for (const auto& [cls, why] : c.excluded)
    std::cout << "  not " << class_letter(cls) << ": " << why << "\n";
  return 0;
}

int cmd_oracle(const std::string& expr_text, int root_label, bool root_set,
               std::uint64_t max_nodes) {
  RootedTree t = expr_to_tree(parse_tree_expr(expr_text));
  SearchBudget budget;
  budget.max_nodes = max_nodes;
  auto res = brute_force_graceful(
      t, root_set ? std::optional<int>(root_label) : std::nullopt, budget);
  if (res.status == SearchStatus::Found) {
    std::cout << to_json(t, *res.labeling);
    return 0;
  }
  std::cerr << (res.status == SearchStatus::Exhausted ? "no graceful labeling under the constraint"
                                                      : "search budget exhausted")
            << "\n";
  return 1;
}

int cmd_sweep(const std::string& cls_text, int max_n, int jobs, int oracle_max_n) {
  ClassId cls = class_from_letter(cls_text.at(0));
  std::vector<RootedTree> trees = enumerate_class({cls, max_n});
  std::atomic<std::size_t> next{0};
  std::atomic<long> failures{0};
  std::atomic<long> oracle_checked{0};
  std::mutex io_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= trees.size()) return;
      const RootedTree& t = trees[i];
      try {
        LabelResult res = label_with(t, std::string(1, class_letter(cls)));
        auto rep = verify_graceful(t, res.labeling);
        bool ok = rep.graceful && res.labeling[t.root] == 0;
        ok = ok && canonical_code(res.trace.final_state.tree) == canonical_code(t);
        if (ok && t.size() <= oracle_max_n) {
          auto or_res = brute_force_graceful(t, 0, SearchBudget{});
          ok = or_res.status == SearchStatus::Found;
          ++oracle_checked;
        }
        if (!ok) throw std::runtime_error("verification failed");
      } catch (const std::exception& e) {
        ++failures;
        std::lock_guard<std::mutex> lock(io_mutex);
        std::cerr << "FAIL " << to_string(tree_to_expr(t)) << ": " << e.what() << "\n";
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::cout << "class " << class_letter(cls) << ": " << trees.size() << " trees up to " << max_n
            << " vertices, " << oracle_checked.load() << " oracle-checked, " << failures.load()
            << " failures\n";
  std::cout << (failures.load() == 0 ? "PASS" : "FAIL") << "\n";
  return failures.load() == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"graceful labelings of odd-children trees via leaf transfers"};
  app.require_subcommand(1);

  std::string expr_text, cls = "auto", trace_path, dot_path, json_path, script_path;
  int star_n = 0, root_label = 0, max_n = 0, jobs = 1, oracle_max_n = 13;
  std::uint64_t max_nodes = 50'000'000;

  auto* label = app.add_subcommand("label", "construct a graceful labeling with root label 0");
  label->add_option("expr", expr_text, "tree expression")->required();
  label->add_option("--class", cls, "a|b|c|d|e|auto")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "auto"}));
  label->add_option("--trace", trace_path, "write the transfer script");
  label->add_option("--dot", dot_path, "write DOT");
  label->add_option("--json", json_path, "write JSON");

  auto* verify = app.add_subcommand("verify", "check a labeled tree JSON file");
  verify->add_option("--json", json_path, "labeled tree JSON")->required();

  auto* replay = app.add_subcommand("replay", "replay a transfer script on a star");
  replay->add_option("--star", star_n, "star size n (center 0, leaves 1..n)")->required();
  replay->add_option("--script", script_path, "transfer script file")->required();
  replay->add_option("--json", json_path, "write JSON");
  replay->add_option("--dot", dot_path, "write DOT");

  auto* classify = app.add_subcommand("classify", "report the matching tree classes");
  classify->add_option("expr", expr_text, "tree expression")->required();

  auto* oracle = app.add_subcommand("oracle", "backtracking graceful-labeling search");
  oracle->add_option("expr", expr_text, "tree expression")->required();
  auto* root_opt = oracle->add_option("--root-label", root_label, "fix the root label");
  oracle->add_option("--max-nodes", max_nodes, "search node budget");

  auto* sweep = app.add_subcommand("sweep", "label every enumerated class tree and verify");
  sweep->add_option("--class", cls, "a|b|c|d|e")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d", "e"}));
  sweep->add_option("--max-n", max_n, "vertex bound")->required();
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--oracle-max-n", oracle_max_n, "oracle cross-check bound");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(label)) return cmd_label(expr_text, cls, trace_path, dot_path, json_path);
    if (app.got_subcommand(verify)) return cmd_verify(json_path);
    if (app.got_subcommand(replay)) return cmd_replay(star_n, script_path, json_path, dot_path);
    if (app.got_subcommand(classify)) return cmd_classify(expr_text);
    if (app.got_subcommand(oracle))
      return cmd_oracle(expr_text, root_label, root_opt->count() > 0, max_nodes);
    if (app.got_subcommand(sweep)) return cmd_sweep(cls, max_n, jobs, oracle_max_n);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace gracetree
