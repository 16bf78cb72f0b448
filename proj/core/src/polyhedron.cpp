#include "setcalc/polyhedron.hpp"

#include <algorithm>
#include <cassert>

namespace setcalc {

namespace {

bool hs_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

void normalize_row(HalfSpace& h) {
  Vec joint = h.normal;
  joint.push_back(h.offset);
  normalize_ray(joint);
  h.offset = joint.back();
  joint.pop_back();
  h.normal = std::move(joint);
}

Vec origin(int dim) { return Vec(dim, Rational(0)); }

// Minimal half-space form via the polar: the homogenized dual cone
// {(y0,y) : y0 + <y,v> >= 0, <y,r> >= 0} has the facets of conv(V)+cone(R)
// as its extreme rays and the affine-hull equalities as its lines.
std::vector<HalfSpace> rows_from_generators(const std::vector<Vec>& vertices,
                                            const std::vector<Vec>& rays, int dim) {
  std::vector<Vec> polar_rows;
  for (const auto& v : vertices) {
    Vec row(dim + 1);
    row[0] = 1;
    for (int i = 0; i < dim; ++i) row[i + 1] = v[i];
    polar_rows.push_back(std::move(row));
  }
  for (const auto& r : rays) {
    Vec row(dim + 1, Rational(0));
    for (int i = 0; i < dim; ++i) row[i + 1] = r[i];
    polar_rows.push_back(std::move(row));
  }
  ConeDescription polar = dual_description(std::move(polar_rows), dim + 1);

  std::vector<HalfSpace> rows;
  auto push_row = [&](const Vec& g, bool as_equality) {
    Vec normal(g.begin() + 1, g.end());
    if (is_zero(normal)) return;  // 0 >= -y0 with y0 >= 0: trivial
    Rational offset = -g[0];
    HalfSpace h{std::move(normal), std::move(offset)};
    normalize_row(h);
    if (as_equality) {
      HalfSpace neg{vec_neg(h.normal), -h.offset};
      rows.push_back(std::move(neg));
    }
    rows.push_back(std::move(h));
  };
  for (const auto& l : polar.lines) push_row(l, true);
  for (const auto& r : polar.rays) push_row(r, false);
  std::sort(rows.begin(), rows.end(), hs_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

// Canonical generators via homogenization {(x0,x) : <a,x> - b x0 >= 0,
// x0 >= 0}: vertices are the rays with x0 > 0, recession directions those
// with x0 = 0, lineality the polyhedron's lines. Returns false when the
// row system is infeasible.
bool generators_from_rows(const std::vector<HalfSpace>& rows, int dim, std::vector<Vec>& verts,
                          std::vector<Vec>& rays) {
  std::vector<Vec> normals;
  for (const auto& h : rows) {
    Vec n(dim + 1);
    n[0] = -h.offset;
    for (int i = 0; i < dim; ++i) n[i + 1] = h.normal[i];
    normals.push_back(std::move(n));
  }
  Vec e0(dim + 1, Rational(0));
  e0[0] = 1;
  normals.push_back(std::move(e0));

  ConeDescription cone = dual_description(std::move(normals), dim + 1);

  verts.clear();
  rays.clear();
  std::vector<Vec> line_dirs;
  for (const auto& l : cone.lines) {
    assert(l[0] == 0);
    line_dirs.emplace_back(l.begin() + 1, l.end());
  }
  for (const auto& r : cone.rays) {
    if (r[0] > 0) {
      Vec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = r[i + 1] / r[0];
      verts.push_back(std::move(v));
    } else {
      Vec d(r.begin() + 1, r.end());
      normalize_ray(d);
      rays.push_back(std::move(d));
    }
  }
  if (verts.empty()) return false;

  for (auto& l : line_dirs) {
    normalize_line(l);
    rays.push_back(l);
    rays.push_back(vec_neg(l));
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return true;
}

}  // namespace

Polyhedron Polyhedron::empty_set(int dim) {
  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = true;
  p.halfspaces_ = {{origin(dim), Rational(1)}};  // 0 >= 1, the infeasibility marker
  return p;
}

Polyhedron Polyhedron::from_generators(std::vector<Vec> vertices, std::vector<Vec> rays, int dim) {
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("vertex width mismatch");
  for (const auto& r : rays)
    if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("ray width mismatch");
  if (vertices.empty()) return empty_set(dim);
  std::erase_if(rays, [](const Vec& r) { return is_zero(r); });

  Polyhedron p;
  p.dim_ = dim;
  p.empty_ = false;
  p.halfspaces_ = rows_from_generators(vertices, rays, dim);
  bool feasible = generators_from_rows(p.halfspaces_, dim, p.vertices_, p.rays_);
  assert(feasible);
  (void)feasible;
  return p;
}

Polyhedron Polyhedron::from_halfspaces(std::vector<HalfSpace> rows, int dim) {
  for (const auto& h : rows)
    if (static_cast<int>(h.normal.size()) != dim) throw std::invalid_argument("row width mismatch");
  Polyhedron p;
  p.dim_ = dim;
  if (!generators_from_rows(rows, dim, p.vertices_, p.rays_)) return empty_set(dim);
  p.empty_ = false;
  p.halfspaces_ = rows_from_generators(p.vertices_, p.rays_, dim);
  return p;
}

Polyhedron Polyhedron::point(Vec v) {
  int d = static_cast<int>(v.size());
  return from_generators({std::move(v)}, {}, d);
}

Polyhedron Polyhedron::cone_hull(std::vector<Vec> rays, int dim) {
  return from_generators({origin(dim)}, std::move(rays), dim);
}

Polyhedron Polyhedron::orthant(int dim) {
  std::vector<Vec> rays;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  return cone_hull(std::move(rays), dim);
}

Polyhedron Polyhedron::full_space(int dim) { return from_halfspaces({}, dim); }

bool Polyhedron::is_cone() const {
  return !empty_ && vertices_.size() == 1 && is_zero(vertices_[0]);
}

bool Polyhedron::is_point() const { return !empty_ && vertices_.size() == 1 && rays_.empty(); }

bool Polyhedron::contains(const Vec& x) const {
  if (empty_) return false;
  for (const auto& h : halfspaces_)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

bool Polyhedron::contains_direction(const Vec& r) const {
  if (empty_) return false;
  for (const auto& h : halfspaces_)
    if (dot(h.normal, r) < 0) return false;
  return true;
}

std::vector<Vec> Polyhedron::lineality_dirs() const {
  std::vector<Vec> dirs;
  for (const auto& r : rays_) {
    Vec n = vec_neg(r);
    if (!std::binary_search(rays_.begin(), rays_.end(), n, lex_less)) continue;
    Vec c = r;
    normalize_line(c);
    dirs.push_back(std::move(c));
  }
  std::sort(dirs.begin(), dirs.end(), lex_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a.empty() || b.empty()) return Polyhedron::empty_set(a.dim());
  std::vector<Vec> verts;
  for (const auto& va : a.vertices())
    for (const auto& vb : b.vertices()) verts.push_back(vec_add(va, vb));
  std::vector<Vec> rays = a.rays();
  rays.insert(rays.end(), b.rays().begin(), b.rays().end());
  return Polyhedron::from_generators(std::move(verts), std::move(rays), a.dim());
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a.empty() || b.empty()) return Polyhedron::empty_set(a.dim());
  std::vector<HalfSpace> rows = a.halfspaces();
  rows.insert(rows.end(), b.halfspaces().begin(), b.halfspaces().end());
  return Polyhedron::from_halfspaces(std::move(rows), a.dim());
}

Polyhedron hull_union(std::span<const Polyhedron> sets) {
  if (sets.empty()) throw std::invalid_argument("hull of empty list");
  int dim = sets.front().dim();
  std::vector<Vec> verts, rays;
  for (const auto& p : sets) {
    if (p.dim() != dim) throw std::invalid_argument("dimension mismatch");
    if (p.empty()) continue;
    verts.insert(verts.end(), p.vertices().begin(), p.vertices().end());
    rays.insert(rays.end(), p.rays().begin(), p.rays().end());
  }
  if (verts.empty()) return Polyhedron::empty_set(dim);
  return Polyhedron::from_generators(std::move(verts), std::move(rays), dim);
}

SupportValue support_function(const Polyhedron& p, const Vec& u) {
  if (p.empty()) return {SupportValue::MinusInfinity, 0};
  for (const auto& r : p.rays())
    if (dot(u, r) > 0) return {SupportValue::PlusInfinity, 0};
  SupportValue s;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rational val = dot(u, v);
    if (first || val > s.value) s.value = val;
    first = false;
  }
  return s;
}

Polyhedron dual_cone(const Polyhedron& k) {
  if (!k.is_cone()) throw std::invalid_argument("dual_cone requires a cone");
  ConeDescription d = dual_description(k.rays(), k.dim());
  std::vector<Vec> rays = d.rays;
  for (const auto& l : d.lines) {
    rays.push_back(l);
    rays.push_back(vec_neg(l));
  }
  return Polyhedron::cone_hull(std::move(rays), k.dim());
}

Polyhedron k0_subspace(const Polyhedron& k) {
  if (k.empty() || !k.contains(Vec(k.dim(), Rational(0))))
    throw std::invalid_argument("k0_subspace requires the origin inside the set");
  std::vector<Vec> rays;
  for (const auto& l : k.lineality_dirs()) {
    rays.push_back(l);
    rays.push_back(vec_neg(l));
  }
  return Polyhedron::cone_hull(std::move(rays), k.dim());
}

Polyhedron recession_cone(const Polyhedron& p) {
  if (p.empty()) throw std::invalid_argument("recession cone of the empty set");
  return Polyhedron::cone_hull(p.rays(), p.dim());
}

bool subset_of(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a.empty()) return true;
  for (const auto& v : a.vertices())
    if (!b.contains(v)) return false;
  for (const auto& r : a.rays())
    if (!b.contains_direction(r)) return false;
  return true;
}

SetOrder compare(const Polyhedron& a, const Polyhedron& b) {
  bool ab = subset_of(a, b);
  bool ba = subset_of(b, a);
  if (ab && ba) return SetOrder::Equal;
  if (ab) return SetOrder::ASubsetB;
  if (ba) return SetOrder::BSubsetA;
  return SetOrder::Incomparable;
}

Polyhedron translate(const Polyhedron& p, const Vec& shift) {
  if (static_cast<int>(shift.size()) != p.dim()) throw std::invalid_argument("dimension mismatch");
  if (p.empty()) return p;
  std::vector<Vec> verts;
  for (const auto& v : p.vertices()) verts.push_back(vec_add(v, shift));
  return Polyhedron::from_generators(std::move(verts), p.rays(), p.dim());
}

Polyhedron scale(const Rational& factor, const Polyhedron& p) {
  if (p.empty()) return p;
  if (factor == 0) return Polyhedron::point(Vec(p.dim(), Rational(0)));
  std::vector<Vec> verts;
  for (const auto& v : p.vertices()) verts.push_back(vec_scale(factor, v));
  std::vector<Vec> rays = p.rays();
  if (factor < 0)
    for (auto& r : rays) r = vec_neg(r);
  return Polyhedron::from_generators(std::move(verts), std::move(rays), p.dim());
}

Polyhedron negate(const Polyhedron& p) { return scale(Rational(-1), p); }

}  // namespace setcalc
