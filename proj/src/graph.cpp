#include "coop/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "coop/error.hpp"

namespace coop {

namespace {

void check_vertex(const LinkageGraph& g, int v, const char* what) {
  if (v < 0 || v >= g.num_learners)
    throw Error(ErrorCode::InvalidVertex,
                std::string(what) + ": learner id " + std::to_string(v) +
                    " out of range");
}

}  // namespace

LinkageGraph build_graph(const std::vector<int>& dims,
                         std::vector<LinkageEdge> edges) {
  if (dims.empty())
    throw Error(ErrorCode::ShapeError, "build_graph: dims must be non-empty");
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (dims[k] < 1)
      throw Error(ErrorCode::ShapeError,
                  "build_graph: learner " + std::to_string(k) +
                      " has dimension < 1");
  const int m = static_cast<int>(dims.size());

  std::set<std::pair<int, int>> seen;
  for (auto& e : edges) {
    if (e.i == e.j)
      throw Error(ErrorCode::SelfLoop,
                  "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                      ") is a self loop");
    if (e.i < 0 || e.i >= m || e.j < 0 || e.j >= m)
      throw Error(ErrorCode::InvalidVertex,
                  "edge references learner id out of range");
    if (e.pairs.empty())
      throw Error(ErrorCode::ShapeError, "edge with empty slot pairing");
    if (e.i > e.j) {
      std::swap(e.i, e.j);
      for (auto& p : e.pairs) std::swap(p.first, p.second);
    }
    if (!seen.insert({e.i, e.j}).second)
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge on pair (" + std::to_string(e.i) + "," +
                      std::to_string(e.j) + ")");
    std::set<int> si, sj;
    for (const auto& [a, b] : e.pairs) {
      if (a < 0 || a >= dims[e.i] || b < 0 || b >= dims[e.j])
        throw Error(ErrorCode::OutOfRangeSlot,
                    "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                        ") references slot (" + std::to_string(a) + "," +
                        std::to_string(b) + ") past learner dimension");
      if (!si.insert(a).second || !sj.insert(b).second)
        throw Error(ErrorCode::DuplicateSlot,
                    "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                        ") repeats a slot");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  return LinkageGraph{m, dims, std::move(edges)};
}

std::vector<int> connected_component(const LinkageGraph& g, int root) {
  check_vertex(g, root, "connected_component");
  std::vector<std::vector<int>> adj(g.num_learners);
  for (const auto& e : g.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<bool> visited(g.num_learners, false);
  std::vector<int> stack{root};
  visited[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!visited[w]) {
        visited[w] = true;
        stack.push_back(w);
      }
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_learners; ++v)
    if (visited[v]) out.push_back(v);
  return out;
}

std::vector<int> neighbors(const LinkageGraph& g, const std::vector<int>& zeta) {
  if (zeta.empty())
    throw Error(ErrorCode::ShapeError, "neighbors: zeta must be non-empty");
  std::set<int> inside;
  for (int v : zeta) {
    check_vertex(g, v, "neighbors");
    inside.insert(v);
  }
  std::set<int> out;
  for (const auto& e : g.edges) {
    const bool ci = inside.count(e.i) != 0;
    const bool cj = inside.count(e.j) != 0;
    if (ci && !cj) out.insert(e.j);
    if (cj && !ci) out.insert(e.i);
  }
  return {out.begin(), out.end()};
}

TiedParameterSpace tie_parameters(const LinkageGraph& g,
                                  const std::vector<int>& vertex_set) {
  std::vector<int> vs = vertex_set;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs) check_vertex(g, v, "tie_parameters");

  // Flat slot ids in (learner, slot) order; this order makes the minimal
  // class member the canonical representative for free.
  std::map<int, int> offset;
  int total = 0;
  for (int v : vs) {
    offset[v] = total;
    total += g.dims[v];
  }
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // min member stays the root
  };
  for (const auto& e : g.edges) {
    if (!offset.count(e.i) || !offset.count(e.j)) continue;
    for (const auto& [a, b] : e.pairs)
      unite(offset[e.i] + a, offset[e.j] + b);
  }

  std::vector<int> root_to_global(total, -1);
  int d = 0;
  for (int s = 0; s < total; ++s)
    if (find(s) == s) root_to_global[s] = d++;

  TiedParameterSpace space;
  space.vertices = vs;
  space.global_dim = d;
  for (int v : vs) {
    std::vector<int> idx(g.dims[v]);
    for (int s = 0; s < g.dims[v]; ++s)
      idx[s] = root_to_global[find(offset[v] + s)];
    space.slot_map.emplace(v, std::move(idx));
  }
  return space;
}

std::vector<LinkageEdge> induced_edges(const LinkageGraph& g,
                                       const std::vector<int>& vertex_set) {
  std::set<int> inside(vertex_set.begin(), vertex_set.end());
  for (int v : vertex_set) check_vertex(g, v, "induced_edges");
  std::vector<LinkageEdge> out;
  for (const auto& e : g.edges)
    if (inside.count(e.i) && inside.count(e.j)) out.push_back(e);
  return out;
}

}  // namespace coop
