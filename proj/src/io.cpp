#include "gracetree/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace gracetree {

using nlohmann::json;

std::string to_json(const RootedTree& t, const Labeling& f) {
  json vertices = json::array();
  for (Vertex v = 0; v < t.size(); ++v) {
    json entry;
    entry["id"] = v;
    entry["label"] = f[v];
    if (t.parent[v] < 0)
      entry["parent"] = nullptr;
    else
      entry["parent"] = t.parent[v];
    vertices.push_back(entry);
  }
  json out;
  out["vertices"] = vertices;
  return out.dump(2) + "\n";
}

std::string to_json(const LabeledState& s) { return to_json(s.tree, s.f); }

std::pair<RootedTree, Labeling> from_json(const std::string& text) {
  json j = json::parse(text);
  const auto& vs = j.at("vertices");
  const int n = static_cast<int>(vs.size());
  RootedTree t;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  Labeling f;
  f.label.assign(n, -1);
  int root = -1;
  for (const auto& v : vs) {
    int id = v.at("id").get<int>();
    if (id < 0 || id >= n) throw std::runtime_error("vertex id out of range");
    if (v.contains("label") && !v.at("label").is_null()) f[id] = v.at("label").get<int>();
    if (v.at("parent").is_null()) {
      if (root >= 0) throw std::runtime_error("two roots");
      root = id;
    } else {
      t.parent[id] = v.at("parent").get<int>();
    }
  }
  if (root < 0) throw std::runtime_error("no root");
  t.root = root;
  for (Vertex v = 0; v < n; ++v)
    if (v != root) {
      if (t.parent[v] < 0 || t.parent[v] >= n) throw std::runtime_error("bad parent");
      t.children[t.parent[v]].push_back(v);
    }
  // reject cycles / disconnection
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++cnt;
    for (Vertex c : t.children[v]) {
      if (seen[c]) throw std::runtime_error("cycle");
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  if (cnt != n) throw std::runtime_error("disconnected vertex set");
  return {t, f};
}

std::string to_dot(const RootedTree& t, const Labeling& f) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < t.size(); ++v) {
    Vertex p = t.parent[v];
    if (p < 0) continue;
    out << "  " << f[p] << " -- " << f[v] << " [label=" << std::abs(f[p] - f[v]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_script(const TransferScript& script) {
  std::ostringstream out;
  for (const auto& s : script) {
    out << s.from << "->" << s.to << ": " << s.run1.lo << ".." << s.run1.hi;
    if (s.kind == TransferStep::Kind::Type2)
      out << ", " << s.run2.lo << ".." << s.run2.hi;
    out << "\n";
  }
  return out.str();
}

namespace {

struct LineParser {
  const std::string& s;
  std::size_t i = 0;
  explicit LineParser(const std::string& line) : s(line) {}

  void ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(const std::string& tok) {
    ws();
    if (s.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  }
  int number() {
    ws();
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw std::runtime_error("expected a number at column " + std::to_string(i));
    return std::stoi(s.substr(start, i - start));
  }
  LabelRun run() {
    int lo = number();
    int hi = lo;
    if (eat("..")) hi = number();
    return {lo, hi};
  }
  bool done() {
    ws();
    return i >= s.size();
  }
};

}  // namespace

TransferScript parse_script(const std::string& text) {
  TransferScript out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    LineParser lp(line);
    if (lp.done()) continue;
    try {
      int from = lp.number();
      if (!lp.eat("->")) throw std::runtime_error("expected '->'");
      int to = lp.number();
      if (!lp.eat(":")) throw std::runtime_error("expected ':'");
      LabelRun r1 = lp.run();
      if (lp.eat(",")) {
        LabelRun r2 = lp.run();
        if (!lp.done()) throw std::runtime_error("trailing input");
        out.push_back(TransferStep::type2(from, to, r1, r2));
      } else {
        if (!lp.done()) throw std::runtime_error("trailing input");
        out.push_back(TransferStep::type1(from, to, r1));
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("script line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string format_trace(const ConstructionTrace& trace) {
  std::ostringstream out;
  out << "# star " << trace.star_n << "\n";
  out << "# arranged " << to_string(trace.arranged) << "\n";
  out << format_script(trace.script);
  return out.str();
}

}  // namespace gracetree
