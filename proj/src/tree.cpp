#include "gracetree/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gracetree {

namespace {

void build(const TreeExpr& e, RootedTree& t, Vertex at) {
  if (e.is_count()) {
    for (int i = 0; i < e.leaf_count; ++i) {
      Vertex c = t.size();
      t.parent.push_back(at);
      t.children.emplace_back();
      t.children[at].push_back(c);
    }
    return;
  }
  for (const auto& k : e.kids) {
    Vertex c = t.size();
    t.parent.push_back(at);
    t.children.emplace_back();
    t.children[at].push_back(c);
    build(k, t, c);
  }
}

int subtree_depth(const RootedTree& t, Vertex v) {
  int d = 0;
  for (Vertex c : t.children[v]) d = std::max(d, 1 + subtree_depth(t, c));
  return d;
}

}  // namespace

RootedTree expr_to_tree(const TreeExpr& e) {
  RootedTree t;
  t.root = 0;
  t.parent.push_back(-1);
  t.children.emplace_back();
  build(e, t, 0);
  if (t.size() > 65536) throw std::runtime_error("tree too large");
  return t;
}

TreeExpr tree_to_expr(const RootedTree& t, Vertex at) {
  if (subtree_depth(t, at) <= 1) return TreeExpr::count(static_cast<int>(t.children[at].size()));
  std::vector<TreeExpr> kids;
  kids.reserve(t.children[at].size());
  for (Vertex c : t.children[at]) kids.push_back(tree_to_expr(t, c));
  return TreeExpr::node(std::move(kids));
}

TreeExpr tree_to_expr(const RootedTree& t) { return tree_to_expr(t, t.root); }

VerifyReport verify_graceful(const RootedTree& t, const Labeling& f) {
  VerifyReport rep;
  const int n = t.size();
  std::vector<Vertex> missing;
  for (Vertex v = 0; v < n; ++v)
    if (v >= f.size() || f[v] < 0) missing.push_back(v);
  if (!missing.empty())
    rep.violations.push_back({Violation::Kind::MissingVertexLabel, missing});

  std::map<int, std::vector<Vertex>> by_label;
  for (Vertex v = 0; v < n; ++v) {
    if (v >= f.size() || f[v] < 0) continue;
    if (f[v] >= n) rep.violations.push_back({Violation::Kind::LabelOutOfRange, {v}});
    by_label[f[v]].push_back(v);
  }
  for (auto& [lab, vs] : by_label)
    if (vs.size() > 1) rep.violations.push_back({Violation::Kind::DuplicateVertexLabel, vs});

  std::map<int, std::vector<Vertex>> by_edge;  // edge label -> child endpoints
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = t.parent[v];
    if (p < 0) continue;
    if (v >= f.size() || f[v] < 0 || p >= f.size() || f[p] < 0) continue;
    by_edge[std::abs(f[v] - f[p])].push_back(v);
  }
  for (auto& [lab, vs] : by_edge)
    if (vs.size() > 1) rep.violations.push_back({Violation::Kind::DuplicateEdgeLabel, vs});

  rep.graceful = rep.violations.empty();
  return rep;
}

namespace {

std::string ahu(const RootedTree& t, Vertex v) {
  std::vector<std::string> codes;
  codes.reserve(t.children[v].size());
  for (Vertex c : t.children[v]) codes.push_back(ahu(t, c));
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (auto& s : codes) out += s;
  out += ")";
  return out;
}

// Walk a and b in canonical child order simultaneously, recording the map.
bool match(const RootedTree& a, Vertex va, const RootedTree& b, Vertex vb,
           std::vector<Vertex>& out) {
  out[va] = vb;
  auto keyed = [](const RootedTree& t, Vertex v) {
    std::vector<std::pair<std::string, Vertex>> ks;
    for (Vertex c : t.children[v]) ks.emplace_back(ahu(t, c), c);
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  auto ka = keyed(a, va), kb = keyed(b, vb);
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (ka[i].first != kb[i].first) return false;
    if (!match(a, ka[i].second, b, kb[i].second, out)) return false;
  }
  return true;
}

}  // namespace

std::string canonical_code(const RootedTree& t) { return ahu(t, t.root); }

std::optional<std::vector<Vertex>> rooted_isomorphism(const RootedTree& a, const RootedTree& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Vertex> out(a.size(), -1);
  if (!match(a, a.root, b, b.root, out)) return std::nullopt;
  return out;
}

int depth_of(const RootedTree& t) { return subtree_depth(t, t.root); }

namespace {

// Farthest vertex from src plus distances, over the free tree.
std::pair<Vertex, std::vector<int>> farthest(const RootedTree& t, Vertex src) {
  const int n = t.size();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> stack{src};
  dist[src] = 0;
  Vertex best = src;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto visit = [&](Vertex u) {
      if (u >= 0 && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        if (dist[u] > dist[best]) best = u;
        stack.push_back(u);
      }
    };
    visit(t.parent[v]);
    for (Vertex c : t.children[v]) visit(c);
  }
  return {best, dist};
}

}  // namespace

int diameter_of(const RootedTree& t) {
  auto [a, d0] = farthest(t, t.root);
  auto [b, d1] = farthest(t, a);
  return d1[b];
}

std::vector<Vertex> center_of(const RootedTree& t) {
  auto [a, d0] = farthest(t, t.root);
  auto [b, da] = farthest(t, a);
  // Walk the a-b path to its middle.
  std::vector<Vertex> path;
  // Recover path by descending distances from b toward a.
  auto [a2, db] = farthest(t, b);
  Vertex cur = b;
  path.push_back(cur);
  while (cur != a) {
    Vertex next = -1;
    auto try_step = [&](Vertex u) {
      if (u >= 0 && da[u] == da[cur] - 1 && db[u] == db[cur] + 1) next = u;
    };
    try_step(t.parent[cur]);
    if (next < 0)
      for (Vertex c : t.children[cur]) {
        try_step(c);
        if (next >= 0) break;
      }
    cur = next;
    path.push_back(cur);
  }
  int diam = static_cast<int>(path.size()) - 1;
  if (diam % 2 == 0) return {path[diam / 2]};
  return {path[diam / 2], path[diam / 2 + 1]};
}

RootedTree rerooted(const RootedTree& t, Vertex new_root) {
  const int n = t.size();
  RootedTree out;
  out.root = new_root;
  out.parent.assign(n, -1);
  out.children.assign(n, {});
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{new_root};
  seen[new_root] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto visit = [&](Vertex u) {
      if (u >= 0 && !seen[u]) {
        seen[u] = 1;
        out.parent[u] = v;
        out.children[v].push_back(u);
        stack.push_back(u);
      }
    };
    visit(t.parent[v]);
    for (Vertex c : t.children[v]) visit(c);
  }
  return out;
}

RootedTree recentered(const RootedTree& t) {
  auto c = center_of(t);
  if (c.size() != 1)
    throw std::runtime_error("tree has an edge center (odd diameter); no vertex center");
  return rerooted(t, c[0]);
}

}  // namespace gracetree
