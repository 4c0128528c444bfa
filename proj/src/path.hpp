#pragma once

#include "combinatorics.hpp"

#include <array>
#include <optional>
#include <vector>

namespace monopath {

/* arcs[i] = (tail, head) for edges[i] of the polytope it was built from. */
struct Orientation {
  std::vector<std::pair<int, int>> arcs;
};

/* The monotone Hamilton path as vertex indices into p.vertices.
   p must carry exactly the Q-tilde label set for its (d=4, m). */
std::vector<int> build_path(const CombinatorialPolytope& p);

/* Label sequence of the path (no polytope required). */
std::vector<VertexLabel> build_path_labels(int m);

bool is_hamilton_path(const CombinatorialPolytope& p, const std::vector<int>& order);

Orientation orientation_from_path(const CombinatorialPolytope& p, const std::vector<int>& order);

/* A k-face as the set of facet labels cutting it out plus its vertex set. */
struct Face {
  std::vector<int> facets;
  std::vector<int> vertices;
};

/* k in {0,1,2,3}: faces are the (d-k)-subsets S of [n] with at least k+1
   incident vertices; in a simple 4-polytope this identifies faces exactly. */
std::vector<Face> enumerate_faces(const CombinatorialPolytope& p, int k);

struct AofReport {
  bool acyclic = false;
  bool unique_sink_per_face = false;
  std::array<long, 5> indegree_histogram{};
  bool histogram_matches_h = false;
  bool aof = false;
  std::optional<bool> holt_klee;
};

AofReport check_aof(const CombinatorialPolytope& p, const Orientation& o,
                    bool with_holt_klee = false);

/* Precondition: o is an AOF orientation of p (else the source/sink structure
   is undefined and this throws StructureViolation). True iff every k-face with
   k >= 2 admits k vertex-disjoint directed source-to-sink paths. */
bool check_holt_klee(const CombinatorialPolytope& p, const Orientation& o);

} // namespace monopath
