#include "linalg.hpp"

#include "errors.hpp"

namespace monopath {

Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 operator*(const Rational& s, const Vec4& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

Rational dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Hyperplane primitive(const Hyperplane& h) {
  Integer l = 1;
  for (int i = 0; i < 4; ++i) {
    Integer den = h.normal[i].get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  {
    Integer den = h.offset.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Hyperplane out;
  Rational scale(l);
  for (int i = 0; i < 4; ++i) out.normal[i] = scale * h.normal[i];
  out.offset = scale * h.offset;
  Integer g = 0;
  for (int i = 0; i < 4; ++i) {
    Integer num = out.normal[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  {
    Integer num = out.offset.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g > 1) {
    Rational inv = rat(Integer(1), g);
    for (int i = 0; i < 4; ++i) out.normal[i] *= inv;
    out.offset *= inv;
  }
  return out;
}

Vec4 AffineMap::apply(const Vec4& x) const {
  return {dot(rows[0], x) + t[0], dot(rows[1], x) + t[1], dot(rows[2], x) + t[2],
          dot(rows[3], x) + t[3]};
}

AffineMap AffineMap::identity() {
  AffineMap f;
  for (int i = 0; i < 4; ++i) f.rows[static_cast<std::size_t>(i)][i] = 1;
  return f;
}

AffineMap AffineMap::shear(int i, int j, const Rational& a) {
  AffineMap f = identity();
  f.rows[static_cast<std::size_t>(i)][j] += a;
  return f;
}

AffineMap AffineMap::translation(const Vec4& delta) {
  AffineMap f = identity();
  f.t = delta;
  return f;
}

AffineMap AffineMap::scale_axis(int i, const Rational& s) {
  AffineMap f = identity();
  f.rows[static_cast<std::size_t>(i)][i] = s;
  return f;
}

AffineMap compose(const AffineMap& g, const AffineMap& f) {
  AffineMap out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Rational s = 0;
      for (int k = 0; k < 4; ++k)
        s += g.rows[static_cast<std::size_t>(i)][k] * f.rows[static_cast<std::size_t>(k)][j];
      out.rows[static_cast<std::size_t>(i)][j] = s;
    }
  }
  out.t = g.apply(f.t);
  return out;
}

std::optional<AffineMap> inverse(const AffineMap& f) {
  // invert [M | t] by solving M y = e_i for the columns of M^{-1}
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.rows[static_cast<std::size_t>(i)][j];
  AffineMap inv;
  for (int col = 0; col < 4; ++col) {
    std::vector<Rational> e(4);
    e[static_cast<std::size_t>(col)] = 1;
    auto y = solve_linear(m, e);
    if (!y) return std::nullopt;
    for (int i = 0; i < 4; ++i) inv.rows[static_cast<std::size_t>(i)][col] = (*y)[static_cast<std::size_t>(i)];
  }
  Vec4 mt = {-f.t[0], -f.t[1], -f.t[2], -f.t[3]};
  Vec4 invt;
  for (int i = 0; i < 4; ++i) invt[i] = dot(inv.rows[static_cast<std::size_t>(i)], mt);
  inv.t = invt;
  return inv;
}

Vec4 apply_projective(const ProjectiveMap& psi, const Vec4& x) {
  Rational den = dot(psi.a, x) - psi.a0;
  if (den == 0) throw PointAtInfinity("projective image undefined: a.x == a0");
  Rational inv = 1 / den;
  return inv * x;
}

namespace {

/* Row echelon form in place; returns the pivot columns. */
std::vector<int> echelon(std::vector<std::vector<Rational>>& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

} // namespace

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b) {
  std::size_t k = A.size();
  for (std::size_t i = 0; i < k; ++i) A[i].push_back(b[i]);
  auto pivots = echelon(A);
  if (pivots.size() != k) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt; // pivot in the b column
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = A[i][k];
  return x;
}

int matrix_rank(std::vector<std::vector<Rational>> A) {
  return static_cast<int>(echelon(A).size());
}

std::optional<Hyperplane> fit_hyperplane(const std::vector<Vec4>& pts) {
  if (pts.size() < 4) return std::nullopt;
  std::vector<std::vector<Rational>> a;
  a.reserve(pts.size());
  for (const Vec4& p : pts) a.push_back({p[0], p[1], p[2], p[3], -1});
  auto pivots = echelon(a);
  if (pivots.size() != 4) return std::nullopt;
  // one free column: the nullspace vector has 1 there, pivot entries read off
  bool is_pivot[5] = {false, false, false, false, false};
  for (int p : pivots) is_pivot[p] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(5);
  v[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    v[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(free_col)];
  Hyperplane h;
  h.normal = {v[0], v[1], v[2], v[3]};
  h.offset = v[4];
  if (h.normal == Vec4{}) return std::nullopt; // degenerate: equation 0 = c
  return primitive(h);
}

Vec4 segment_cut(const Vec4& p, const Vec4& q, const Hyperplane& h) {
  Rational fp = h.eval(p), fq = h.eval(q);
  if (sgn(fp) == 0 || sgn(fq) == 0 || sgn(fp) == sgn(fq))
    throw NonGenericCut("segment does not cross the hyperplane transversally");
  Rational mu = fp / (fp - fq);
  return p + mu * (q - p);
}

int affine_dim_2d(const std::vector<Vec2>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> a;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec2 d = pts[i] - pts[0];
    a.push_back({d.x, d.y});
  }
  if (a.empty()) return 0;
  return matrix_rank(std::move(a));
}

} // namespace monopath
