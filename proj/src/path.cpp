#include "path.hpp"

#include "errors.hpp"

#include <algorithm>
#include <deque>

namespace monopath {

namespace {

bool labels_adjacent(const VertexLabel& a, const VertexLabel& b) {
  return intersection_size(a, b) == a.size() - 1;
}

/* Walk the induced path on the tip-2 labels from a given start label. */
std::vector<VertexLabel> walk_t2(const std::vector<VertexLabel>& t2, const VertexLabel& start) {
  std::vector<VertexLabel> out;
  out.push_back(start);
  VertexLabel prev;
  VertexLabel cur = start;
  while (true) {
    std::vector<VertexLabel> next;
    for (const auto& w : t2)
      if (w != cur && w != prev && labels_adjacent(cur, w)) next.push_back(w);
    if (next.empty()) break;
    if (next.size() > 1)
      throw StructureViolation("tip-2 subgraph is not an induced path at " + label_str(cur));
    prev = cur;
    cur = next[0];
    out.push_back(cur);
  }
  return out;
}

} // namespace

std::vector<VertexLabel> build_path_labels(int m) {
  if (m < 0) throw InvalidLabel("m must be nonnegative");
  if (m == 0)
    return {{2, 3, 4, 5}, {1, 2, 3, 5}, {1, 2, 3, 4}, {1, 3, 4, 5}, {1, 2, 4, 5}};

  int n = m + 5;
  auto sp = special_vertices(m);
  std::vector<VertexLabel> seq;
  seq.push_back(sp.alpha);
  for (int j = m + 1; j >= 1; --j) seq.push_back({j, j + 1, j + 2, n});

  auto prev = build_path_labels(m - 1);
  for (const auto& v : prev)
    if (tip_of(v, 4, n - 1) % 2 == 0) seq.push_back(v);

  seq.push_back(sp.beta);

  // tip-2 chain from beta's unique tip-2 neighbor to omega
  std::vector<VertexLabel> t2;
  {
    CombinatorialPolytope q = generate_qtilde(4, m);
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
      if (q.tips[i] == 2) t2.push_back(q.vertices[i]);
  }
  std::vector<VertexLabel> starts;
  for (const auto& w : t2)
    if (labels_adjacent(sp.beta, w)) starts.push_back(w);
  if (starts.size() != 1)
    throw StructureViolation("beta does not have a unique tip-2 neighbor");
  auto chain = walk_t2(t2, starts[0]);
  if (chain.size() != t2.size() || chain.back() != sp.omega)
    throw StructureViolation("tip-2 chain does not end at omega");
  for (auto& w : chain) seq.push_back(std::move(w));
  return seq;
}

bool is_hamilton_path(const CombinatorialPolytope& p, const std::vector<int>& order) {
  std::size_t f0 = p.vertices.size();
  if (order.size() != f0) return false;
  std::vector<char> seen(f0, 0);
  for (int v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= f0 || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!p.is_edge(order[i], order[i + 1])) return false;
  return true;
}

std::vector<int> build_path(const CombinatorialPolytope& p) {
  if (p.d != 4) throw StructureViolation("paths are built for d = 4 only");
  int m = p.m();
  CombinatorialPolytope expect = generate_qtilde(4, m);
  if (p.vertices != expect.vertices)
    throw StructureViolation("polytope does not carry the expected label set for m = " +
                             std::to_string(m));
  auto labels = build_path_labels(m);
  std::vector<int> order;
  order.reserve(labels.size());
  for (const auto& v : labels) {
    int idx = p.index_of(v);
    if (idx < 0) throw StructureViolation("path label missing: " + label_str(v));
    order.push_back(idx);
  }
  if (!is_hamilton_path(p, order))
    throw StructureViolation("constructed order is not a Hamilton path");
  AofReport rep = check_aof(p, orientation_from_path(p, order));
  if (!rep.aof) throw StructureViolation("path-induced orientation is not an AOF orientation");
  return order;
}

Orientation orientation_from_path(const CombinatorialPolytope& p, const std::vector<int>& order) {
  if (!is_hamilton_path(p, order)) throw StructureViolation("order is not a Hamilton path");
  std::vector<int> pos(p.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  Orientation o;
  o.arcs.reserve(p.edges.size());
  for (auto [i, j] : p.edges) {
    if (pos[i] < pos[j]) o.arcs.emplace_back(i, j);
    else o.arcs.emplace_back(j, i);
  }
  return o;
}

std::vector<Face> enumerate_faces(const CombinatorialPolytope& p, int k) {
  if (k < 0 || k > 3) throw InvalidLabel("face dimension must be 0..3");
  std::vector<Face> out;
  if (k == 0) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      out.push_back({p.vertices[i], {static_cast<int>(i)}});
    return out;
  }
  if (k == 1) {
    for (auto [i, j] : p.edges) {
      Face f;
      std::set_intersection(p.vertices[i].begin(), p.vertices[i].end(), p.vertices[j].begin(),
                            p.vertices[j].end(), std::back_inserter(f.facets));
      f.vertices = {i, j};
      out.push_back(std::move(f));
    }
    return out;
  }
  auto collect = [&p, &out, k](std::vector<int> facets) {
    Face f;
    f.facets = std::move(facets);
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      if (std::includes(p.vertices[i].begin(), p.vertices[i].end(), f.facets.begin(),
                        f.facets.end()))
        f.vertices.push_back(static_cast<int>(i));
    if (f.vertices.size() >= static_cast<std::size_t>(k) + 1) out.push_back(std::move(f));
  };
  if (k == 3) {
    for (int l = 1; l <= p.n; ++l) collect({l});
  } else {
    for (int a = 1; a <= p.n; ++a)
      for (int b = a + 1; b <= p.n; ++b) collect({a, b});
  }
  return out;
}

namespace {

bool unique_sink(std::size_t total, const std::vector<std::vector<int>>& out_adj,
                 const std::vector<int>& face_vertices) {
  std::vector<char> in_face(total, 0);
  for (int v : face_vertices) in_face[v] = 1;
  int sinks = 0;
  for (int v : face_vertices) {
    bool has_out = false;
    for (int w : out_adj[v])
      if (in_face[w]) {
        has_out = true;
        break;
      }
    if (!has_out) ++sinks;
  }
  return sinks == 1;
}

/* Max number of vertex-disjoint s->t paths in the induced digraph, capped at need.
   Unit vertex capacities via node splitting; s and t are uncapacitated. */
int disjoint_paths(const std::vector<int>& verts, const std::vector<std::vector<int>>& out_adj,
                   int s, int t, int need, std::size_t total) {
  std::vector<int> local(total, -1);
  int nv = static_cast<int>(verts.size());
  for (int i = 0; i < nv; ++i) local[verts[i]] = i;
  int nn = 2 * nv; // in = 2i, out = 2i+1
  std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
  for (int i = 0; i < nv; ++i) cap[2 * i][2 * i + 1] = 1;
  int ls = local[s], lt = local[t];
  cap[2 * ls][2 * ls + 1] = need;
  cap[2 * lt][2 * lt + 1] = need;
  for (int i = 0; i < nv; ++i)
    for (int w : out_adj[verts[i]]) {
      int j = local[w];
      if (j >= 0) cap[2 * i + 1][2 * j] = 1;
    }
  int src = 2 * ls, dst = 2 * lt + 1;
  int flow = 0;
  while (flow < need) {
    std::vector<int> parent(nn, -1);
    std::deque<int> q{src};
    parent[src] = src;
    while (!q.empty() && parent[dst] < 0) {
      int u = q.front();
      q.pop_front();
      for (int w = 0; w < nn; ++w)
        if (parent[w] < 0 && cap[u][w] > 0) {
          parent[w] = u;
          q.push_back(w);
        }
    }
    if (parent[dst] < 0) break;
    for (int w = dst; w != src; w = parent[w]) {
      int u = parent[w];
      --cap[u][w];
      ++cap[w][u];
    }
    ++flow;
  }
  return flow;
}

std::vector<std::vector<int>> out_adjacency(const CombinatorialPolytope& p, const Orientation& o) {
  if (o.arcs.size() != p.edges.size()) throw StructureViolation("orientation does not match edge list");
  std::vector<std::vector<int>> out_adj(p.vertices.size());
  for (std::size_t e = 0; e < o.arcs.size(); ++e) {
    auto [u, v] = o.arcs[e];
    auto [i, j] = p.edges[e];
    if (!((u == i && v == j) || (u == j && v == i)))
      throw StructureViolation("arc endpoints disagree with edge list");
    out_adj[u].push_back(v);
  }
  return out_adj;
}

} // namespace

AofReport check_aof(const CombinatorialPolytope& p, const Orientation& o, bool with_holt_klee) {
  AofReport rep;
  auto out_adj = out_adjacency(p, o);
  std::size_t f0 = p.vertices.size();

  std::vector<int> indeg(f0, 0);
  for (auto [u, v] : o.arcs) {
    (void)u;
    ++indeg[v];
  }
  for (int d : indeg) ++rep.indegree_histogram[d];

  {
    std::vector<int> deg = indeg;
    std::deque<int> q;
    for (std::size_t v = 0; v < f0; ++v)
      if (deg[v] == 0) q.push_back(static_cast<int>(v));
    std::size_t done = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      ++done;
      for (int w : out_adj[u])
        if (--deg[w] == 0) q.push_back(w);
    }
    rep.acyclic = done == f0;
  }

  rep.unique_sink_per_face = true;
  for (int k = 1; k <= 3 && rep.unique_sink_per_face; ++k)
    for (const Face& f : enumerate_faces(p, k))
      if (!unique_sink(f0, out_adj, f.vertices)) {
        rep.unique_sink_per_face = false;
        break;
      }
  if (rep.unique_sink_per_face) {
    std::vector<int> all(f0);
    for (std::size_t i = 0; i < f0; ++i) all[i] = static_cast<int>(i);
    if (!unique_sink(f0, out_adj, all)) rep.unique_sink_per_face = false;
  }

  rep.histogram_matches_h = rep.indegree_histogram == h_vector(p);
  rep.aof = rep.acyclic && rep.unique_sink_per_face;
  if (with_holt_klee) rep.holt_klee = rep.aof ? check_holt_klee(p, o) : false;
  return rep;
}

bool check_holt_klee(const CombinatorialPolytope& p, const Orientation& o) {
  auto out_adj = out_adjacency(p, o);
  std::vector<std::vector<int>> in_adj(p.vertices.size());
  for (auto [u, v] : o.arcs) in_adj[v].push_back(u);

  auto face_ok = [&](const std::vector<int>& verts, int k) {
    std::vector<char> in_face(p.vertices.size(), 0);
    for (int v : verts) in_face[v] = 1;
    int s = -1, t = -1;
    for (int v : verts) {
      bool has_out = false, has_in = false;
      for (int w : out_adj[v])
        if (in_face[w]) has_out = true;
      for (int w : in_adj[v])
        if (in_face[w]) has_in = true;
      if (!has_out) {
        if (t >= 0) throw StructureViolation("holt-klee check needs an AOF orientation");
        t = v;
      }
      if (!has_in) {
        if (s >= 0) throw StructureViolation("holt-klee check needs an AOF orientation");
        s = v;
      }
    }
    if (s < 0 || t < 0) throw StructureViolation("holt-klee check needs an AOF orientation");
    return disjoint_paths(verts, out_adj, s, t, k, p.vertices.size()) >= k;
  };

  for (const Face& f : enumerate_faces(p, 2))
    if (!face_ok(f.vertices, 2)) return false;
  for (const Face& f : enumerate_faces(p, 3))
    if (!face_ok(f.vertices, 3)) return false;
  std::vector<int> all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return face_ok(all, 4);
}

} // namespace monopath
