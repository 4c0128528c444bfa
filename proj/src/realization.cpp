#include "realization.hpp"

#include "errors.hpp"
#include "log.hpp"
#include "path.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace monopath {

namespace {

/* Indices of the distinguished vertices and of the facet slices F2 and F3. */
struct Frame {
  int alpha = -1, beta = -1, omega = -1, tau = -1, v1 = -1;
  std::vector<int> f2;    // vertices containing both n-1 and n
  std::vector<int> f3;    // vertices containing n
  std::vector<char> in3;  // membership mask for f3
  std::vector<char> odd;  // tip parity per vertex
};

int require_index(const CombinatorialPolytope& p, const VertexLabel& v, const char* what) {
  int i = p.index_of(v);
  if (i < 0)
    throw StructureViolation(std::string("missing distinguished vertex ") + what + " = " +
                             label_str(v));
  return i;
}

Frame analyze(const CombinatorialPolytope& p) {
  if (p.d != 4) throw StructureViolation("positioning requires dimension 4");
  int n = p.n;
  int m = p.m();
  SpecialVertices sv = special_vertices(m);
  Frame fr;
  fr.alpha = require_index(p, sv.alpha, "alpha");
  fr.beta = require_index(p, sv.beta, "beta");
  fr.omega = require_index(p, sv.omega, "omega");
  fr.tau = require_index(p, sv.tau, "tau");
  fr.v1 = require_index(p, {m + 1, m + 2, m + 3, n}, "v1");
  int nv = p.vertices.size();
  fr.in3.assign(nv, 0);
  fr.odd.resize(nv);
  for (int i = 0; i < nv; ++i) {
    const VertexLabel& v = p.vertices[i];
    fr.odd[i] = p.tips[i] % 2 != 0;
    if (v[3] == n) {
      fr.f3.push_back(i);
      fr.in3[i] = 1;
      if (v[2] == n - 1) fr.f2.push_back(i);
    }
  }
  return fr;
}

void apply_map(RealizedPolytope& q, const AffineMap& f) {
  for (Vec4& p : q.coords) p = f.apply(p);
  q.facet_planes.clear();
  q.pencil.reset();
  q.certificate.reset();
}

bool increasing_x4(const RealizedPolytope& q) {
  if (q.path.empty() || q.path.size() != q.coords.size()) return false;
  for (std::size_t i = 0; i + 1 < q.path.size(); ++i)
    if (!(q.coords[q.path[i]][3] < q.coords[q.path[i + 1]][3])) return false;
  return true;
}

Vec4 unit(int axis) {
  Vec4 u;
  u[axis] = 1;
  return u;
}

int affine_dim_4d(const std::vector<Vec4>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec4 d = pts[i] - pts[0];
    rows.push_back({d[0], d[1], d[2], d[3]});
  }
  if (rows.empty()) return 0;
  return matrix_rank(rows);
}

/* Scale a nonzero rational 2-vector by a positive factor to a primitive
   integer vector. */
Vec2 primitive2(const Vec2& v) {
  Integer l;
  {
    Integer dx = v.x.get_den(), dy = v.y.get_den();
    mpz_lcm(l.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  }
  Rational s(l);
  Vec2 out{s * v.x, s * v.y};
  Integer g;
  {
    Integer nx = out.x.get_num(), ny = out.y.get_num();
    mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  }
  if (g > 1) {
    Rational inv = rat(Integer(1), g);
    out.x *= inv;
    out.y *= inv;
  }
  return out;
}

bool label_contains(const VertexLabel& v, int l) {
  return std::binary_search(v.begin(), v.end(), l);
}

const char* first_failure(const MReport& r) {
  if (!r.m1) return "(M1)";
  if (!r.m2) return "(M2)";
  if (!r.m3) return "(M3)";
  if (!r.m4) return "(M4)";
  if (!r.m5) return "(M5)";
  if (!r.m6) return "(M6)";
  return "anchor";
}

} // namespace

bool Certificate::all_true() const {
  bool ok = simple && convex && combinatorial_match && monotone_path && aof;
  if (holt_klee) ok = ok && *holt_klee;
  if (enumeration_match) ok = ok && *enumeration_match;
  return ok;
}

RealizedPolytope base_simplex() {
  RealizedPolytope q;
  q.comb = generate_qtilde(4, 0);
  std::map<VertexLabel, Vec4> pts;
  pts[{2, 3, 4, 5}] = Vec4(0, 0, -3, -2);
  pts[{1, 2, 3, 5}] = Vec4(0, 1, -1, rat(-1, 2));
  pts[{1, 2, 3, 4}] = Vec4(1, 0, 3, 0);
  pts[{1, 3, 4, 5}] = Vec4(0, 0, 2, rat(1, 4));
  pts[{1, 2, 4, 5}] = Vec4(0, 0, 1, 2);
  for (const VertexLabel& v : q.comb.vertices) q.coords.push_back(pts.at(v));
  q.path = build_path(q.comb);
  return q;
}

MReport check_conditions_M(const RealizedPolytope& q) {
  Frame fr = analyze(q.comb);
  const std::vector<Vec4>& C = q.coords;
  int nv = q.comb.vertices.size();
  if ((int)C.size() != nv || nv == 0)
    throw StructureViolation("coordinate vector does not match the vertex list");
  MReport r;

  r.m1 = increasing_x4(q);

  r.m2 = true;
  for (int i : fr.f2) r.m2 = r.m2 && C[i][0] == 0;

  {
    bool onplane = true, outside = true;
    std::vector<Vec4> f3pts;
    for (int i = 0; i < nv; ++i) {
      if (fr.in3[i]) {
        onplane = onplane && C[i][0] == 0;
        f3pts.push_back(C[i]);
      } else {
        outside = outside && sign_of(C[i][0]) > 0;
      }
    }
    r.m3 = onplane && outside && affine_dim_4d(f3pts) == 3;
  }

  {
    bool peak = C[fr.alpha][1] == 0;
    for (int i : fr.f2)
      if (i != fr.alpha) peak = peak && sign_of(C[i][1]) < 0;
    r.m4 = peak && C[fr.beta][1] < C[fr.v1][1];
  }

  {
    std::vector<Vec2> proj;
    for (int i : fr.f2) proj.push_back(project34(C[i]));
    r.m5 = affine_dim_2d(proj) == 2;
  }

  r.m6 = true;
  for (int i = 0; i < nv; ++i)
    r.m6 = r.m6 && (fr.odd[i] ? sign_of(C[i][2]) < 0 : sign_of(C[i][2]) > 0);

  if (r.m1 && r.m6) {
    Hyperplane hs{Vec4(0, 0, 1, 0), 0};
    Vec4 z = segment_cut(C[fr.alpha], C[fr.beta], hs);
    bool level = z[3] == C[fr.tau][3];
    bool minimal = true;
    for (const auto& e : q.comb.edges) {
      int i = e.first, j = e.second;
      if (!fr.in3[i] || !fr.in3[j]) continue;
      if (fr.odd[i] == fr.odd[j]) continue;
      if ((i == fr.alpha && j == fr.beta) || (i == fr.beta && j == fr.alpha)) continue;
      Vec4 y = segment_cut(C[i], C[j], hs);
      minimal = minimal && z[3] < y[3];
    }
    r.anchor = level && minimal;
  }
  return r;
}

RealizedPolytope position(const RealizedPolytope& q0, int max_retries) {
  Frame fr = analyze(q0.comb);
  if (!increasing_x4(q0)) throw StructureViolation("position: (M1) must hold on input");

  RealizedPolytope base = q0;
  base.facet_planes.clear();
  base.pencil.reset();
  base.certificate.reset();

  /* (A) put aff F3 onto {x1 = 0} with the interior on x1 > 0; x4 untouched */
  {
    std::vector<Vec4> pts;
    for (int i : fr.f3) pts.push_back(base.coords[i]);
    auto g0 = fit_hyperplane(pts);
    if (!g0) throw StructureViolation("position: the last facet is not 3-dimensional");
    Hyperplane g = primitive(*g0);
    int ref = -1;
    for (int i = 0; i < (int)base.coords.size(); ++i)
      if (!fr.in3[i]) { ref = i; break; }
    if (ref < 0) throw StructureViolation("position: no vertex off the last facet");
    int s = sign_of(g.eval(base.coords[ref]));
    if (s == 0) throw StructureViolation("position: the polytope is flat");
    if (s < 0) {
      g.normal = rat(-1) * g.normal;
      g.offset = -g.offset;
    }
    int p = -1;
    for (int i = 0; i < 3; ++i)
      if (g.normal[i] != 0) { p = i; break; }
    if (p < 0) throw StructureViolation("position: the last facet is an x4-level set");
    AffineMap A = AffineMap::identity();
    A.rows[0] = g.normal;
    A.t[0] = -g.offset;
    int row = 1;
    for (int i = 0; i < 3; ++i)
      if (i != p) A.rows[row++] = unit(i);
    A.rows[3] = unit(3);
    apply_map(base, A);
    for (int i = 0; i < (int)base.coords.size(); ++i)
      if (!fr.in3[i] && !(sign_of(base.coords[i][0]) > 0))
        throw StructureViolation("position: vertex off the last facet is not interior-side");
  }

  /* (B) shear x2 by x4 so that on F2 the x2 maximum is 0, attained only at
     alpha, and x2(beta) < x2(v1). alpha starts the path, so every divisor
     below is positive and each constraint is a strict upper bound. */
  {
    const std::vector<Vec4>& C = base.coords;
    Rational x2a = C[fr.alpha][1], x4a = C[fr.alpha][3];
    bool have = false;
    Rational amax;
    auto tighten = [&](const Rational& bound) {
      if (!have || bound < amax) { amax = bound; have = true; }
    };
    for (int i : fr.f2)
      if (i != fr.alpha) tighten((x2a - C[i][1]) / (C[i][3] - x4a));
    tighten((C[fr.v1][1] - C[fr.beta][1]) / (C[fr.beta][3] - C[fr.v1][3]));
    Rational a = Rational(floor_int(amax)) - 1;
    apply_map(base, AffineMap::shear(1, 3, a));
    Vec4 dt;
    dt[1] = -base.coords[fr.alpha][1];
    apply_map(base, AffineMap::translation(dt));
  }

  /* (C)+(D) build the x3 axis: spread pi(F2) with a b-shear, anchor the
     [alpha,beta] crossing of {x3 = 0} at level x4(tau), then push x3 to the
     correct sign on F3 with a c-shear and on the interior with a d-shear.
     b is the only retry knob; everything else is forced. */
  std::string last = "(M5)";
  for (int step = 0; step < 2 * max_retries + 1; ++step) {
    long b = (step % 2 ? 1 : -1) * ((step + 1) / 2);
    RealizedPolytope cand = base;
    if (b != 0) apply_map(cand, AffineMap::shear(2, 1, rat(b)));

    {
      std::vector<Vec2> proj;
      for (int i : fr.f2) proj.push_back(project34(cand.coords[i]));
      if (affine_dim_2d(proj) != 2) { last = "(M5)"; continue; }
    }

    Rational tau4 = cand.coords[fr.tau][3];
    Hyperplane lvl{Vec4(0, 0, 0, 1), tau4};
    Vec4 pab = segment_cut(cand.coords[fr.alpha], cand.coords[fr.beta], lvl);
    Vec4 paw = segment_cut(cand.coords[fr.alpha], cand.coords[fr.omega], lvl);
    int side = sign_of(pab[2] - paw[2]);
    if (side == 0) { last = "level points coincide"; continue; }
    if (side < 0) {
      apply_map(cand, AffineMap::scale_axis(2, rat(-1)));
      pab[2] = -pab[2];
    }
    Rational p3 = pab[2];

    /* Minimality of the anchor is independent of the c-shear below: the
       {x3 = 0} crossing of an odd-even edge (i even j) lands at positive
       x4 - tau4 iff N < 0, where N has no c in it. Check it now so a bad b
       is rejected before any further transformation. */
    {
      const std::vector<Vec4>& C = cand.coords;
      bool ok = true;
      for (const auto& e : q0.comb.edges) {
        int i = e.first, j = e.second;
        if (!fr.in3[i] || !fr.in3[j]) continue;
        if (fr.odd[i] == fr.odd[j]) continue;
        if ((i == fr.alpha && j == fr.beta) || (i == fr.beta && j == fr.alpha)) continue;
        int oi = fr.odd[i] ? i : j;
        int ev = fr.odd[i] ? j : i;
        Rational N = (C[oi][2] - p3) * (C[ev][3] - tau4) - (C[ev][2] - p3) * (C[oi][3] - tau4);
        if (!(sign_of(N) < 0)) { ok = false; break; }
      }
      if (!ok) { last = "anchor minimality"; continue; }
    }

    {
      Vec4 dt;
      dt[2] = -p3;
      dt[3] = -tau4;
      apply_map(cand, AffineMap::translation(dt));
    }

    /* On F3 the odd vertices now have x4 < 0 and the even ones x4 > 0, so
       x3 + c x4 gets the (M6) signs there for every c > -x3/x4. */
    {
      bool have = false;
      Rational cmin;
      for (int i : fr.f3) {
        Rational bound = -cand.coords[i][2] / cand.coords[i][3];
        if (!have || bound > cmin) { cmin = bound; have = true; }
      }
      Integer c = ceil_int(cmin) + 1;
      if (c < 1) c = 1;
      apply_map(cand, AffineMap::shear(2, 3, Rational(c)));
    }

    /* Interior vertices have x1 > 0, so a d-shear fixes their x3 sign
       without touching F3. Skip when already positive. */
    {
      bool have = false;
      Rational dmin;
      for (int i = 0; i < (int)cand.coords.size(); ++i) {
        if (fr.in3[i]) continue;
        Rational bound = -cand.coords[i][2] / cand.coords[i][0];
        if (!have || bound > dmin) { dmin = bound; have = true; }
      }
      if (have && sign_of(dmin) >= 0)
        apply_map(cand, AffineMap::shear(2, 0, Rational(ceil_int(dmin) + 1)));
    }

    MReport rep = check_conditions_M(cand);
    if (rep.all()) {
      log_debug("position: accepted b = ", b, " at m = ", q0.m());
      return cand;
    }
    last = first_failure(rep);
  }
  throw PositioningFailure("position: b schedule exhausted at m = " + std::to_string(q0.m()) +
                           "; last failure: " + last);
}

RealizedPolytope cut(const RealizedPolytope& q, const Hyperplane& h, int new_label) {
  int n = q.comb.n;
  if (new_label != n + 1) throw StructureViolation("cut: the new facet label must be n+1");
  int nv = q.comb.vertices.size();
  std::vector<int> side(nv);
  for (int i = 0; i < nv; ++i) {
    side[i] = sign_of(h.eval(q.coords[i]));
    if (side[i] == 0)
      throw NonGenericCut("cut: vertex " + label_str(q.comb.vertices[i]) +
                          " lies on the cutting plane");
    bool odd = q.comb.tips[i] % 2 != 0;
    if (odd != (side[i] < 0))
      throw StructureViolation("cut: the plane does not separate odd tips from even");
  }
  std::map<VertexLabel, Vec4> pts;
  for (int i = 0; i < nv; ++i)
    if (side[i] > 0) pts.emplace(q.comb.vertices[i], q.coords[i]);
  int created = 0;
  for (const auto& e : q.comb.edges) {
    if (side[e.first] == side[e.second]) continue;
    VertexLabel nl =
        new_vertex_label(q.comb.vertices[e.first], q.comb.vertices[e.second], new_label);
    Vec4 z = segment_cut(q.coords[e.first], q.coords[e.second], h);
    if (!pts.emplace(nl, z).second)
      throw CombinatorialMismatch("cut: duplicate new vertex " + label_str(nl));
    ++created;
  }
  log_debug("cut: kept ", (int)pts.size() - created, " vertices, created ", created);
  std::vector<VertexLabel> labels;
  labels.reserve(pts.size());
  for (const auto& kv : pts) labels.push_back(kv.first);
  RealizedPolytope out;
  out.comb = build_polytope(4, n + 1, labels);
  CombinatorialPolytope expect = generate_qtilde(4, q.m() + 1);
  if (out.comb.vertices != expect.vertices)
    throw CombinatorialMismatch("cut: result is not the next member of the family");
  out.coords.reserve(labels.size());
  for (const VertexLabel& v : out.comb.vertices) out.coords.push_back(pts.at(v));
  out.path = build_path(out.comb);
  return out;
}

std::pair<CutParams, RealizedPolytope> choose_cut(const RealizedPolytope& q, int max_retries) {
  MReport pre = check_conditions_M(q);
  if (!pre.all())
    throw StructureViolation(std::string("choose_cut: input violates ") + first_failure(pre));
  int n = q.comb.n;
  int nv = q.comb.vertices.size();
  std::vector<char> odd(nv), tip4(nv);
  for (int i = 0; i < nv; ++i) {
    odd[i] = q.comb.tips[i] % 2 != 0;
    tip4[i] = q.comb.tips[i] == 4;
  }
  std::string last = "separation";
  for (int s = 1; s <= max_retries; ++s) {
    Rational a = pow2(s), eps = pow2(-s);
    RealizedPolytope sheared = q;
    apply_map(sheared, AffineMap::shear(2, 0, a));
    for (int k = 1; k <= max_retries; ++k) {
      Rational delta = eps * pow2(-k);
      Hyperplane H = primitive(Hyperplane{Vec4(0, -delta, 1, eps), 0});

      bool ok = true;
      for (int i = 0; i < nv && ok; ++i) {
        int sg = sign_of(H.eval(sheared.coords[i]));
        ok = odd[i] ? sg < 0 : sg > 0;
      }
      if (!ok) { last = "separation"; continue; }

      /* chords running into the interior tip must be cut at x3 > 0 */
      for (const auto& e : q.comb.edges) {
        if (odd[e.first] == odd[e.second]) continue;
        if (!tip4[e.first] && !tip4[e.second]) continue;
        Vec4 z = segment_cut(sheared.coords[e.first], sheared.coords[e.second], H);
        if (!(sign_of(z[2]) > 0)) { ok = false; break; }
      }
      if (!ok) { last = "cut-point height"; continue; }

      RealizedPolytope next = cut(sheared, H, n + 1);
      try {
        next.pencil = build_pencil(next, next.path.front(), next.path.back(), max_retries);
      } catch (const PencilFailure& e) {
        last = e.what();
        continue;
      }
      log_info("choose_cut: m = ", q.m(), " accepted a = ", rational_str(a),
               ", eps = ", rational_str(eps), ", delta = ", rational_str(delta));
      return {CutParams{a, eps, delta, H}, std::move(next)};
    }
  }
  throw CutFailure("choose_cut: (a, eps, delta) schedule exhausted at m = " +
                   std::to_string(q.m()) + "; last failure: " + last);
}

PencilInfo build_pencil(const RealizedPolytope& q, int first_idx, int last_idx,
                        int max_retries) {
  Vec2 A = project34(q.coords[first_idx]);
  Vec2 W = project34(q.coords[last_idx]);
  Vec2 u0 = W - A;
  if (u0 == Vec2{0, 0})
    throw StructureViolation("pencil: path endpoints project to the same point");
  std::string last = "(S1)";
  for (int i = 1; i <= max_retries; ++i) {
    Rational e1 = pow2(-i);
    for (int j = 1; j <= max_retries; ++j) {
      Rational e3 = pow2(-j);
      Vec2 O = A + e1 * u0 + Vec2{-e3, 0};
      bool hit = false;
      for (const Vec4& p : q.coords)
        if (project34(p) == O) { hit = true; break; }
      if (hit) { last = "(S1) base point meets a vertex"; continue; }

      /* the line through O along u must miss the projection: all denominators
         share one nonzero sign (either sign makes the map admissible) */
      {
        Vec2 w0{-u0.y, u0.x};
        int uniform = 0;
        for (const Vec4& p : q.coords) {
          int sg = sign_of(dot(w0, project34(p) - O));
          if (sg == 0 || (uniform != 0 && sg != uniform)) { uniform = 0; break; }
          uniform = sg;
        }
        if (uniform == 0) { last = "projection meets the horizon line"; continue; }
      }

      /* flipping w negates t, covering both sweep directions */
      for (int flip = 0; flip < 2; ++flip) {
        Vec2 w = flip ? Vec2{u0.y, -u0.x} : Vec2{-u0.y, u0.x};
        bool inc = true;
        Rational prev;
        bool first = true;
        for (int idx : q.path) {
          Vec2 rel = project34(q.coords[idx]) - O;
          Rational t = dot(u0, rel) / dot(w, rel);
          if (!first && !(prev < t)) { inc = false; break; }
          prev = t;
          first = false;
        }
        if (!inc) continue;
        PencilInfo out;
        out.O = O;
        out.eps1 = e1;
        out.eps3 = e3;
        out.u = primitive2(u0);
        out.w = primitive2(w);
        return out;
      }
      last = "(S2) sweep order";
    }
  }
  throw PencilFailure("pencil: (eps1, eps3) schedule exhausted; last failure: " + last);
}

RealizedPolytope projective_normalize(const RealizedPolytope& q0, const PencilInfo& pencil) {
  RealizedPolytope q = q0;
  q.facet_planes.clear();
  q.pencil.reset();
  q.certificate.reset();
  Vec2 u = pencil.u, w = pencil.w, O = pencil.O;
  Rational cw = dot(w, O);
  if (cw == 0) {
    /* slide everything, base point included, until the map is projective;
       the sweep values do not move */
    Rational ww = dot(w, w);
    Vec2 step{w.x / ww, w.y / ww};
    Vec4 delta(0, 0, step.x, step.y);
    for (Vec4& p : q.coords) p = p + delta;
    O = O + step;
    cw = dot(w, O);
  }
  {
    int uniform = 0;
    for (const Vec4& p : q.coords) {
      int sg = sign_of(dot(w, project34(p)) - cw);
      if (sg == 0) throw StructureViolation("projective step: vertex on the horizon");
      if (uniform == 0) uniform = sg;
      else if (sg != uniform)
        throw StructureViolation("projective step: horizon crosses the polytope");
    }
  }
  ProjectiveMap psi{Vec4(0, 0, w.x, w.y), cw};
  for (Vec4& p : q.coords) p = apply_projective(psi, p);

  /* after psi the sweep value of y is L . pi(y) + const with L as below, so
     pushing L to the x4 slot makes the path x4-monotone */
  Rational cu = dot(u, O);
  Vec2 L{u.x - (cu / cw) * w.x, u.y - (cu / cw) * w.y};
  if (L == Vec2{0, 0}) throw RealizationBug("projective step: sweep functional vanished");
  L = primitive2(L);
  AffineMap M = AffineMap::identity();
  M.rows[2] = L.y != 0 ? unit(2) : unit(3);
  M.rows[3] = Vec4(0, 0, L.x, L.y);
  apply_map(q, M);
  if (!increasing_x4(q))
    throw RealizationBug("projective step: path is not x4-monotone afterwards");
  return q;
}

std::vector<Hyperplane> recover_facets(const RealizedPolytope& q, bool exhaustive) {
  int n = q.comb.n;
  int nv = q.comb.vertices.size();
  if ((int)q.coords.size() != nv || nv == 0)
    throw StructureViolation("recover_facets: coordinates missing");

  std::vector<Hyperplane> planes(n);
  for (int l = 1; l <= n; ++l) {
    std::vector<Vec4> pts;
    for (int i = 0; i < nv; ++i)
      if (label_contains(q.comb.vertices[i], l)) pts.push_back(q.coords[i]);
    if (pts.size() < 4)
      throw RealizationBug("facet " + std::to_string(l) + " has fewer than 4 vertices");
    auto h0 = fit_hyperplane(pts);
    if (!h0)
      throw RealizationBug("facet " + std::to_string(l) + ": vertices do not span a hyperplane");
    Hyperplane h = primitive(*h0);
    int orient = 0;
    for (int i = 0; i < nv && orient == 0; ++i)
      if (!label_contains(q.comb.vertices[i], l)) orient = sign_of(h.eval(q.coords[i]));
    if (orient == 0)
      throw RealizationBug("facet " + std::to_string(l) + " touches every vertex");
    if (orient < 0) {
      h.normal = rat(-1) * h.normal;
      h.offset = -h.offset;
    }
    planes[l - 1] = h;
  }

  for (int i = 0; i < nv; ++i)
    for (int l = 1; l <= n; ++l) {
      int sg = sign_of(planes[l - 1].eval(q.coords[i]));
      bool incident = label_contains(q.comb.vertices[i], l);
      if (incident ? sg != 0 : sg <= 0)
        throw RealizationBug("vertex " + label_str(q.comb.vertices[i]) +
                             " fails the incidence test at facet " + std::to_string(l));
    }

  if (exhaustive) {
    long found = 0;
    for (int l1 = 1; l1 <= n; ++l1)
      for (int l2 = l1 + 1; l2 <= n; ++l2)
        for (int l3 = l2 + 1; l3 <= n; ++l3)
          for (int l4 = l3 + 1; l4 <= n; ++l4) {
            VertexLabel lab{l1, l2, l3, l4};
            int idx = q.comb.index_of(lab);
            std::vector<std::vector<Rational>> Amat;
            std::vector<Rational> b;
            for (int l : lab) {
              const Hyperplane& h = planes[l - 1];
              Amat.push_back({h.normal[0], h.normal[1], h.normal[2], h.normal[3]});
              b.push_back(h.offset);
            }
            auto x = solve_linear(std::move(Amat), std::move(b));
            if (!x) {
              if (idx >= 0)
                throw RealizationBug("claimed vertex " + label_str(lab) +
                                     " has degenerate facet planes");
              continue;
            }
            Vec4 pt((*x)[0], (*x)[1], (*x)[2], (*x)[3]);
            bool feasible = true;
            for (int l = 1; l <= n && feasible; ++l)
              feasible = sign_of(planes[l - 1].eval(pt)) >= 0;
            if (!feasible) {
              if (idx >= 0)
                throw RealizationBug("claimed vertex " + label_str(lab) + " is infeasible");
              continue;
            }
            if (idx < 0)
              throw RealizationBug("facet planes admit an unclaimed vertex " + label_str(lab));
            if (!(pt == q.coords[idx]))
              throw RealizationBug("vertex " + label_str(lab) + " sits at the wrong point");
            ++found;
          }
    if (found != nv)
      throw RealizationBug("vertex enumeration found " + std::to_string(found) + " of " +
                           std::to_string(nv));
  }
  return planes;
}

Certificate certify(RealizedPolytope& q, const RealizeOptions& opts) {
  Certificate c;
  CombinatorialPolytope expect = generate_qtilde(4, q.m());
  c.combinatorial_match = q.comb.vertices == expect.vertices && q.comb.edges == expect.edges;

  c.monotone_path = q.path.size() == q.comb.vertices.size() && increasing_x4(q);
  if (c.monotone_path) {
    try {
      c.monotone_path = q.path == build_path(q.comb);
    } catch (const Error&) {
      c.monotone_path = false;
    }
  }

  try {
    Orientation o = orientation_from_path(q.comb, q.path);
    AofReport ar = check_aof(q.comb, o, opts.holt_klee);
    c.aof = ar.aof && ar.histogram_matches_h;
    if (opts.holt_klee) c.holt_klee = ar.holt_klee.value_or(false);
  } catch (const Error&) {
    c.aof = false;
    if (opts.holt_klee) c.holt_klee = false;
  }

  bool exhaustive = q.m() <= opts.enum_limit_m;
  try {
    q.facet_planes = recover_facets(q, exhaustive);
    c.simple = true;
    c.convex = true;
    if (exhaustive) c.enumeration_match = true;
  } catch (const RealizationBug& e) {
    log_info("certificate: ", e.what());
    c.simple = false;
    c.convex = false;
    if (exhaustive) c.enumeration_match = false;
  }
  q.certificate = c;
  return c;
}

RealizedPolytope realize(int m, const RealizeOptions& opts) {
  if (m < 0) throw StructureViolation("realize: m must be nonnegative");
  log_info("realize: base simplex");
  RealizedPolytope q = position(base_simplex(), opts.max_retries);
  for (int step = 1; step <= m; ++step) {
    log_info("realize: step ", step, " of ", m, " (n = ", q.comb.n + 1, ")");
    try {
      auto [params, next] = choose_cut(q, opts.max_retries);
      q = position(projective_normalize(next, *next.pencil), opts.max_retries);
    } catch (const PositioningFailure& e) {
      throw PositioningFailure("step " + std::to_string(step) + ": " + e.what());
    } catch (const CutFailure& e) {
      throw CutFailure("step " + std::to_string(step) + ": " + e.what());
    } catch (const PencilFailure& e) {
      throw PencilFailure("step " + std::to_string(step) + ": " + e.what());
    }
  }
  Certificate c = certify(q, opts);
  if (!c.all_true())
    throw RealizationBug("realize: certificate failed at m = " + std::to_string(m));
  log_info("realize: m = ", m, " done, ", (int)q.comb.vertices.size(), " vertices");
  return q;
}

} // namespace monopath
