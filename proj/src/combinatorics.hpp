#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monopath {

/* A vertex of a simple d-polytope with n facets is identified with the
   sorted d-set of facet labels (1-based) it lies on. */
using VertexLabel = std::vector<int>;

enum class VertexType { None, Type1, Type2a, Type2b };

std::string label_str(const VertexLabel& v);

/* Pattern predicates over sorted d-subsets of [n]. */
VertexType classify_qtilde_label(const VertexLabel& v, int n);
bool gale_evenness(const VertexLabel& v, int n);

struct CombinatorialPolytope {
  int d = 4;
  int n = 0;
  std::vector<VertexLabel> vertices;          // lexicographically sorted
  std::vector<std::pair<int, int>> edges;     // i < j, sorted
  std::vector<std::vector<int>> adj;          // derived from edges
  std::vector<int> tips;                      // tip index per vertex

  int m() const { return n - d - 1; }
  int index_of(const VertexLabel& v) const;   // -1 when absent
  bool is_edge(int i, int j) const;
};

/* Assemble a polytope from a label set: sorts labels, derives edges by the
   (d-1)-intersection rule, computes tips, and checks simplicity (every
   vertex must have exactly d neighbors) and connectivity. */
CombinatorialPolytope build_polytope(int d, int n, std::vector<VertexLabel> labels);

CombinatorialPolytope generate_qtilde(int d, int m);
CombinatorialPolytope generate_dual_cyclic(int n); // d = 4

/* Tip classification by the largest absent facet label. */
int tip_of(const VertexLabel& v, int d, int n);

struct SpecialVertices {
  VertexLabel alpha, beta, omega, tau;
};
SpecialVertices special_vertices(int m);

/* d = 4 only. f = (f0, f1, f2, f3); h has d+1 entries. */
std::array<long, 4> f_vector(const CombinatorialPolytope& p);
std::array<long, 5> h_vector(const CombinatorialPolytope& p);

std::size_t intersection_size(const VertexLabel& a, const VertexLabel& b);
VertexLabel new_vertex_label(const VertexLabel& u, const VertexLabel& v, int facet);

/* Facet relabeling sigma with sigma(vertices(p)) == vertices(q), as a vector
   im with im[i] = sigma(i+1). Lexicographically smallest witness, or nullopt. */
std::optional<std::vector<int>> check_isomorphic(const CombinatorialPolytope& p,
                                                 const CombinatorialPolytope& q);

unsigned long long binomial(int n, int k);

} // namespace monopath
