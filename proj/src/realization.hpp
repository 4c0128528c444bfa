#pragma once

#include "combinatorics.hpp"
#include "linalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace monopath {

/* Sweep pencil for one inductive step, living in the pi-plane (x3, x4).
   The sweep value of a point y is t(y) = u.(pi(y)-O) / w.(pi(y)-O); the
   denominators are strictly positive on every vertex, so the pencil of lines
   through O meets the projected polytope in t-order. */
struct PencilInfo {
  Vec2 O;
  Rational eps1;  // how far O sits along [pi(first), pi(last)]
  Rational eps3;  // horizontal retreat keeping O off the projected polytope
  Vec2 u;         // primitive, direction pi(last) - pi(first)
  Vec2 w;         // primitive, denominator functional
};

struct CutParams {
  Rational a;      // strength of the x3 <- x3 + a x1 shear applied before cutting
  Rational eps;    // x4 tilt of the cutting plane
  Rational delta;  // x2 tilt
  Hyperplane H;    // primitive integer form of (0, -delta, 1, eps) . x = 0
};

struct MReport {
  bool m1 = false;     // x4 strictly increasing along the path
  bool m2 = false;     // F2 inside {x1 = 0}
  bool m3 = false;     // aff F3 = {x1 = 0} and the polytope on x1 >= 0
  bool m4 = false;     // x2 < 0 on F2 away from alpha, x2(alpha) = 0, x2(beta) < x2(v1)
  bool m5 = false;     // pi(F2) two-dimensional
  bool m6 = false;     // x3 < 0 exactly on the odd-tip vertices
  bool anchor = false; // [alpha,beta] meets {x3 = 0} at level x4(tau), minimally so
  bool all() const { return m1 && m2 && m3 && m4 && m5 && m6 && anchor; }
};

struct Certificate {
  bool simple = false;
  bool convex = false;
  bool combinatorial_match = false;
  bool monotone_path = false;
  bool aof = false;
  std::optional<bool> holt_klee;
  std::optional<bool> enumeration_match;
  bool all_true() const;
};

struct RealizedPolytope {
  CombinatorialPolytope comb;
  std::vector<Vec4> coords;              // aligned with comb.vertices
  std::vector<Hyperplane> facet_planes;  // facet_planes[l-1] for label l; filled by certify
  std::vector<int> path;                 // canonical monotone Hamilton path, vertex indices
  std::optional<PencilInfo> pencil;      // attached to the intermediate polytope of a step
  std::optional<Certificate> certificate;

  int m() const { return comb.m(); }
};

struct RealizeOptions {
  bool holt_klee = true;
  int enum_limit_m = 6;    // run the exhaustive vertex enumeration for m <= this
  int max_retries = 32;    // cap on every halving/doubling parameter schedule
};

/* The five-vertex start of the family with its raw pinned coordinates.
   Satisfies (M1) but needs position() before anything else is guaranteed. */
RealizedPolytope base_simplex();

MReport check_conditions_M(const RealizedPolytope& q);

/* Renormalize coordinates by an invertible affine map until
   check_conditions_M passes everything. Combinatorics and path untouched. */
RealizedPolytope position(const RealizedPolytope& q, int max_retries = 32);

/* Slice q with h, keeping the side where the even-tip vertices live.
   new_label names the new facet and must be n+1. The result must carry the
   combinatorics of the next member of the family. */
RealizedPolytope cut(const RealizedPolytope& q, const Hyperplane& h, int new_label);

/* Search the (a, eps, delta) schedule for a cut of sigma(q) that produces the
   next member of the family and admits a sweep pencil. Returns the accepted
   parameters and the cut polytope with its pencil attached. */
std::pair<CutParams, RealizedPolytope> choose_cut(const RealizedPolytope& q,
                                                  int max_retries = 32);

/* Pencil through a base point near pi of the path's first vertex, sweeping the
   projected vertices in path order. */
PencilInfo build_pencil(const RealizedPolytope& q, int first_idx, int last_idx,
                        int max_retries = 32);

/* Send the pencil's base point to infinity and align the sweep direction with
   the x4 axis; afterwards x4 is strictly increasing along the path. */
RealizedPolytope projective_normalize(const RealizedPolytope& q, const PencilInfo& pencil);

/* Fit every facet hyperplane, orient it inward, and check all vertex-facet
   incidences exactly. With exhaustive set, additionally solve all C(n,4)
   quadruples and compare the feasible ones against the claimed vertex set.
   Any discrepancy throws RealizationBug with a precise message. */
std::vector<Hyperplane> recover_facets(const RealizedPolytope& q, bool exhaustive);

/* Populate q.facet_planes and q.certificate; returns the certificate. */
Certificate certify(RealizedPolytope& q, const RealizeOptions& opts = {});

RealizedPolytope realize(int m, const RealizeOptions& opts = {});

} // namespace monopath
