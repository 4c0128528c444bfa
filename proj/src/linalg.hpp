#pragma once

#include "rational.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace monopath {

struct Vec4 {
  std::array<Rational, 4> c{};

  Vec4() = default;
  Vec4(Rational a, Rational b, Rational d, Rational e)
      : c{std::move(a), std::move(b), std::move(d), std::move(e)} {}

  Rational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const Rational& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  bool operator==(const Vec4&) const = default;
};

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(const Rational& s, const Vec4& a);
Rational dot(const Vec4& a, const Vec4& b);

struct Vec2 {
  Rational x, y;
  bool operator==(const Vec2&) const = default;
};

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(const Rational& s, const Vec2& a);
Rational dot(const Vec2& a, const Vec2& b);
Rational cross(const Vec2& a, const Vec2& b);

/* normal . x = offset; the positive side is normal . x > offset. */
struct Hyperplane {
  Vec4 normal;
  Rational offset;

  Rational eval(const Vec4& p) const { return dot(normal, p) - offset; }
};

/* Scale to a primitive integer normal, keeping orientation. */
Hyperplane primitive(const Hyperplane& h);

/* y = M x + t, rows are the coordinate functionals of the image. */
struct AffineMap {
  std::array<Vec4, 4> rows;
  Vec4 t;

  Vec4 apply(const Vec4& x) const;

  static AffineMap identity();
  /* x_i <- x_i + a * x_j, i != j */
  static AffineMap shear(int i, int j, const Rational& a);
  static AffineMap translation(const Vec4& delta);
  static AffineMap scale_axis(int i, const Rational& s);
};

/* g o f (apply f first) */
AffineMap compose(const AffineMap& g, const AffineMap& f);
std::optional<AffineMap> inverse(const AffineMap& f);

/* x -> x / (a . x - a0); valid projective transformation iff a0 != 0. */
struct ProjectiveMap {
  Vec4 a;
  Rational a0;
};

Vec4 apply_projective(const ProjectiveMap& psi, const Vec4& x); // throws PointAtInfinity

/* Exact Gaussian elimination. Returns the unique solution of A x = b,
   or nullopt when A is singular (including rank-deficient rectangular
   systems; A must be square here). */
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b);

/* Rank of an arbitrary exact matrix. */
int matrix_rank(std::vector<std::vector<Rational>> A);

/* Hyperplane through all given points: requires the solution space of
   [p_i | -1] . (normal, offset) = 0 to be exactly one-dimensional.
   Orientation is unspecified; callers orient. */
std::optional<Hyperplane> fit_hyperplane(const std::vector<Vec4>& pts);

/* Intersection point of the open segment (p,q) with H. Precondition:
   p and q lie strictly on opposite sides; otherwise NonGenericCut. */
Vec4 segment_cut(const Vec4& p, const Vec4& q, const Hyperplane& h);

inline Vec2 project34(const Vec4& p) { return Vec2{p[2], p[3]}; }

/* Affine dimension of a point set in the pi-plane (-1 for empty). */
int affine_dim_2d(const std::vector<Vec2>& pts);

} // namespace monopath
