#include "combinatorics.hpp"

#include "errors.hpp"

#include <algorithm>
#include <queue>

namespace monopath {

std::string label_str(const VertexLabel& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

namespace {

struct Run {
  int start;
  int len;
};

std::vector<Run> runs_of(const VertexLabel& v) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    runs.push_back({v[i], static_cast<int>(j - i + 1)});
    i = j + 1;
  }
  return runs;
}

bool valid_subset(const VertexLabel& v, int d, int n) {
  if (static_cast<int>(v.size()) != d) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > n) return false;
    if (i && v[i] <= v[i - 1]) return false;
  }
  return true;
}

} // namespace

VertexType classify_qtilde_label(const VertexLabel& v, int n) {
  auto runs = runs_of(v);

  // union of pairs, first box {1,2}
  if (v.front() == 1) {
    bool all_even = true;
    for (const Run& r : runs)
      if (r.len % 2) {
        all_even = false;
        break;
      }
    if (all_even) return VertexType::Type2b;
  }

  // triplet + pairs + {n}: drop n, first run odd >= 3, later runs even
  if (v.back() == n) {
    VertexLabel rest(v.begin(), v.end() - 1);
    if (!rest.empty()) {
      auto rruns = runs_of(rest);
      bool ok = rruns[0].len >= 3 && rruns[0].len % 2 == 1;
      for (std::size_t i = 1; ok && i < rruns.size(); ++i)
        if (rruns[i].len % 2) ok = false;
      if (ok) return VertexType::Type2a;
    }
  }

  // triplet with a hole {j, j+2} + pairs strictly after
  if (runs.size() >= 2 && runs[0].len == 1 && runs[1].start == runs[0].start + 2 &&
      runs[1].len % 2 == 1) {
    bool ok = true;
    for (std::size_t i = 2; ok && i < runs.size(); ++i)
      if (runs[i].len % 2) ok = false;
    if (ok) return VertexType::Type1;
  }

  return VertexType::None;
}

bool gale_evenness(const VertexLabel& v, int n) {
  for (const Run& r : runs_of(v)) {
    bool touches_end = r.start == 1 || r.start + r.len - 1 == n;
    if (!touches_end && r.len % 2) return false;
  }
  return true;
}

int CombinatorialPolytope::index_of(const VertexLabel& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool CombinatorialPolytope::is_edge(int i, int j) const {
  const auto& a = adj[static_cast<std::size_t>(i)];
  return std::find(a.begin(), a.end(), j) != a.end();
}

std::size_t intersection_size(const VertexLabel& a, const VertexLabel& b) {
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) ++common, ++i, ++j;
    else if (a[i] < b[j]) ++i;
    else ++j;
  }
  return common;
}

CombinatorialPolytope build_polytope(int d, int n, std::vector<VertexLabel> labels) {
  CombinatorialPolytope p;
  p.d = d;
  p.n = n;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!valid_subset(labels[i], d, n)) throw InvalidLabel("bad vertex label " + label_str(labels[i]));
    if (i && labels[i] == labels[i - 1]) throw InvalidLabel("duplicate label " + label_str(labels[i]));
  }
  p.vertices = std::move(labels);
  std::size_t f0 = p.vertices.size();
  p.adj.assign(f0, {});
  for (std::size_t i = 0; i < f0; ++i)
    for (std::size_t j = i + 1; j < f0; ++j)
      if (intersection_size(p.vertices[i], p.vertices[j]) == static_cast<std::size_t>(d - 1)) {
        p.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        p.adj[i].push_back(static_cast<int>(j));
        p.adj[j].push_back(static_cast<int>(i));
      }
  for (std::size_t i = 0; i < f0; ++i)
    if (p.adj[i].size() != static_cast<std::size_t>(d))
      throw NotSimple("vertex " + label_str(p.vertices[i]) + " has degree " +
                      std::to_string(p.adj[i].size()));
  // connectivity
  if (f0) {
    std::vector<char> seen(f0, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : p.adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++cnt;
          q.push(w);
        }
    }
    if (cnt != f0) throw StructureViolation("vertex-edge graph is disconnected");
  }
  p.tips.reserve(f0);
  for (const auto& v : p.vertices) p.tips.push_back(tip_of(v, d, n));
  return p;
}

namespace {

template <typename Pred>
std::vector<VertexLabel> filter_subsets(int d, int n, Pred&& keep) {
  std::vector<VertexLabel> out;
  VertexLabel cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (keep(cur)) out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (d - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

} // namespace

CombinatorialPolytope generate_qtilde(int d, int m) {
  if (d != 4 && d != 6 && d != 8) throw InvalidLabel("d must be 4, 6 or 8");
  if (m < 0) throw InvalidLabel("m must be nonnegative");
  int n = m + d + 1;
  auto labels = filter_subsets(d, n, [n](const VertexLabel& v) {
    return classify_qtilde_label(v, n) != VertexType::None;
  });
  return build_polytope(d, n, std::move(labels));
}

CombinatorialPolytope generate_dual_cyclic(int n) {
  if (n < 5) throw InvalidLabel("dual-cyclic needs n >= 5");
  auto labels = filter_subsets(4, n, [n](const VertexLabel& v) { return gale_evenness(v, n); });
  return build_polytope(4, n, std::move(labels));
}

int tip_of(const VertexLabel& v, int d, int n) {
  if (!valid_subset(v, d, n)) throw InvalidLabel("not a sorted d-subset of [n]: " + label_str(v));
  int maxc = -1;
  std::size_t k = v.size();
  for (int x = n; x >= 1; --x) {
    if (k > 0 && v[k - 1] == x) {
      --k;
      continue;
    }
    maxc = x;
    break;
  }
  int m = n - d - 1;
  if (maxc == m + 2) return 0;
  if (maxc == m + 1) return 1;
  int i = maxc - m - 1;
  if (i < 2 || i > d) throw InvalidLabel("tip undefined for " + label_str(v));
  return i;
}

SpecialVertices special_vertices(int m) {
  if (m < 0) throw InvalidLabel("m must be nonnegative");
  if (m == 0) return {{2, 3, 4, 5}, {1, 3, 4, 5}, {1, 2, 4, 5}, {1, 2, 3, 4}};
  int n = m + 5;
  return {{n - 3, n - 2, n - 1, n},
          {n - 4, n - 2, n - 1, n},
          {n - 5, n - 3, n - 1, n},
          {n - 5, n - 3, n - 2, n - 1}};
}

std::array<long, 4> f_vector(const CombinatorialPolytope& p) {
  if (p.d != 4) throw NotSimple("f_vector expects a 4-polytope");
  long f0 = static_cast<long>(p.vertices.size());
  long f1 = static_cast<long>(p.edges.size());
  if (f1 != 2 * f0) throw NotSimple("not 4-regular");
  long f3 = p.n;
  long f2 = f1 - f0 + f3; // Euler
  return {f0, f1, f2, f3};
}

std::array<long, 5> h_vector(const CombinatorialPolytope& p) {
  if (p.d != 4) throw NotSimple("h_vector expects a 4-polytope");
  std::array<long, 5> tip_count{0, 0, 0, 0, 0};
  for (int t : p.tips) ++tip_count[static_cast<std::size_t>(t)];
  std::array<long, 5> h = {tip_count[1], tip_count[3], tip_count[4], tip_count[2], tip_count[0]};
  long m = p.m();
  std::array<long, 5> closed = {1, m + 1, static_cast<long>(binomial(static_cast<int>(m) + 2, 2)),
                                m + 1, 1};
  if (h != closed)
    throw StructureViolation("tip histogram disagrees with the h-vector closed form");
  return h;
}

VertexLabel new_vertex_label(const VertexLabel& u, const VertexLabel& v, int facet) {
  VertexLabel out;
  std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  if (out.size() != u.size() - 1)
    throw InvalidLabel("labels are not adjacent: " + label_str(u) + " " + label_str(v));
  auto it = std::lower_bound(out.begin(), out.end(), facet);
  if (it != out.end() && *it == facet) throw InvalidLabel("new facet already present");
  out.insert(it, facet);
  return out;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

namespace {

struct IsoContext {
  const CombinatorialPolytope* p;
  const CombinatorialPolytope* q;
  std::vector<std::vector<int>> pair_p, pair_q; // co-incidence counts, 1-based
  std::vector<int> count_p, count_q;            // per-facet vertex counts, 1-based
  std::vector<int> image;                        // sigma, 1-based, 0 = unassigned
  std::vector<char> used;

  bool assign(int facet) {
    int n = p->n;
    if (facet > n) return verify();
    for (int y = 1; y <= n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      if (count_p[static_cast<std::size_t>(facet)] != count_q[static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (int f2 = 1; f2 < facet && ok; ++f2)
        if (pair_p[static_cast<std::size_t>(facet)][static_cast<std::size_t>(f2)] !=
            pair_q[static_cast<std::size_t>(y)][static_cast<std::size_t>(image[static_cast<std::size_t>(f2)])])
          ok = false;
      if (!ok) continue;
      image[static_cast<std::size_t>(facet)] = y;
      used[static_cast<std::size_t>(y)] = 1;
      if (assign(facet + 1)) return true;
      image[static_cast<std::size_t>(facet)] = 0;
      used[static_cast<std::size_t>(y)] = 0;
    }
    return false;
  }

  bool verify() const {
    std::vector<VertexLabel> mapped;
    mapped.reserve(p->vertices.size());
    for (const auto& v : p->vertices) {
      VertexLabel w;
      w.reserve(v.size());
      for (int f : v) w.push_back(image[static_cast<std::size_t>(f)]);
      std::sort(w.begin(), w.end());
      mapped.push_back(std::move(w));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == q->vertices;
  }
};

} // namespace

std::optional<std::vector<int>> check_isomorphic(const CombinatorialPolytope& p,
                                                 const CombinatorialPolytope& q) {
  if (p.d != q.d || p.n != q.n || p.vertices.size() != q.vertices.size()) return std::nullopt;
  int n = p.n;
  IsoContext ctx;
  ctx.p = &p;
  ctx.q = &q;
  auto counts = [n](const CombinatorialPolytope& poly, std::vector<int>& cnt,
                    std::vector<std::vector<int>>& pair) {
    cnt.assign(static_cast<std::size_t>(n) + 1, 0);
    pair.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (const auto& v : poly.vertices)
      for (std::size_t i = 0; i < v.size(); ++i) {
        ++cnt[static_cast<std::size_t>(v[i])];
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          ++pair[static_cast<std::size_t>(v[i])][static_cast<std::size_t>(v[j])];
          ++pair[static_cast<std::size_t>(v[j])][static_cast<std::size_t>(v[i])];
        }
      }
  };
  counts(p, ctx.count_p, ctx.pair_p);
  counts(q, ctx.count_q, ctx.pair_q);
  ctx.image.assign(static_cast<std::size_t>(n) + 1, 0);
  ctx.used.assign(static_cast<std::size_t>(n) + 1, 0);
  if (!ctx.assign(1)) return std::nullopt;
  return std::vector<int>(ctx.image.begin() + 1, ctx.image.end());
}

} // namespace monopath
