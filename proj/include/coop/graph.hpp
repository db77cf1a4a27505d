#pragma once

#include <map>
#include <utility>
#include <vector>

namespace coop {

// One model linkage: an ordered list of slot pairings equating parameter
// subvectors of two learners. Learner ids are 0-based throughout the
// library; the file layer converts from the 1-based ids used on disk.
struct LinkageEdge {
  int i = 0;
  int j = 0;
  std::vector<std::pair<int, int>> pairs;  // (slot in i, slot in j)

  friend bool operator==(const LinkageEdge&, const LinkageEdge&) = default;
};

struct LinkageGraph {
  int num_learners = 0;
  std::vector<int> dims;  // parameter dimension per learner
  std::vector<LinkageEdge> edges;
};

// Deduplicated global parameter indexing for a vertex subset: every slot of
// every member maps to a global index, tied slots sharing one index.
struct TiedParameterSpace {
  std::vector<int> vertices;            // sorted ascending
  int global_dim = 0;
  std::map<int, std::vector<int>> slot_map;  // learner -> global index per slot

  bool contains(int learner) const { return slot_map.count(learner) != 0; }
  int global_index(int learner, int slot) const {
    return slot_map.at(learner).at(static_cast<std::size_t>(slot));
  }
};

// Validates and normalizes (i < j, at most one edge per pair, slots in range).
LinkageGraph build_graph(const std::vector<int>& dims,
                         std::vector<LinkageEdge> edges);

// Vertices connected to root (including root), sorted ascending.
std::vector<int> connected_component(const LinkageGraph& g, int root);

// Learners outside zeta with at least one edge into it, sorted ascending.
std::vector<int> neighbors(const LinkageGraph& g, const std::vector<int>& zeta);

// Union-find closure over all edges internal to vertex_set. Global indices
// are canonical: classes ordered by their minimal (learner, slot) member.
TiedParameterSpace tie_parameters(const LinkageGraph& g,
                                  const std::vector<int>& vertex_set);

// Edges of g with both endpoints inside vertex_set.
std::vector<LinkageEdge> induced_edges(const LinkageGraph& g,
                                       const std::vector<int>& vertex_set);

}  // namespace coop
