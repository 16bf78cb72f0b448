#pragma once

#include "setcalc/dd.hpp"

#include <span>

namespace setcalc {

/// Closed half-space {x : <normal, x> >= offset}.
struct HalfSpace {
  Vec normal;
  Rational offset;
  bool operator==(const HalfSpace&) const = default;
};

enum class SetOrder { Equal, ASubsetB, BSubsetA, Incomparable };

struct SupportValue {
  enum Kind { Finite, PlusInfinity, MinusInfinity } kind = Finite;
  Rational value = 0;  // meaningful for Finite only
  bool finite() const { return kind == Finite; }
};

/// Generalized convex polyhedron conv(V) + cone(R) over exact rationals,
/// kept simultaneously in canonical generator and half-space form.
///
/// Canonical form: no redundant generators or half-spaces, lineality
/// directions stored as +-ray pairs, every vertex/ray reduced modulo the
/// lineality space, rays and rows scaled to coprime integers, all lists
/// sorted. Equal point sets therefore compare equal field-by-field.
///
/// The empty set carries an explicit flag; its half-space form is the
/// infeasible marker row <0, x> >= 1.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron empty_set(int dim);
  static Polyhedron from_generators(std::vector<Vec> vertices, std::vector<Vec> rays, int dim);
  static Polyhedron from_halfspaces(std::vector<HalfSpace> rows, int dim);
  static Polyhedron point(Vec v);
  static Polyhedron cone_hull(std::vector<Vec> rays, int dim);  // conv{0} + cone(rays)
  static Polyhedron orthant(int dim);                           // nonnegative orthant
  static Polyhedron full_space(int dim);

  int dim() const { return dim_; }
  bool empty() const { return empty_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  bool is_cone() const;
  bool is_point() const;
  bool contains(const Vec& x) const;
  bool contains_direction(const Vec& r) const;  // membership in the recession cone

  /// Basis of the lineality space (directions whose +- pair is in rays()).
  std::vector<Vec> lineality_dirs() const;

  bool operator==(const Polyhedron&) const = default;

 private:
  int dim_ = 0;
  bool empty_ = true;
  std::vector<Vec> vertices_;
  std::vector<Vec> rays_;
  std::vector<HalfSpace> halfspaces_;

  static Polyhedron assemble(std::vector<Vec> vertices, std::vector<Vec> rays, int dim);
  friend Polyhedron translate(const Polyhedron&, const Vec&);
  friend Polyhedron scale(const Rational&, const Polyhedron&);
  friend Polyhedron negate(const Polyhedron&);
};

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);
Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
Polyhedron hull_union(std::span<const Polyhedron> sets);

SupportValue support_function(const Polyhedron& p, const Vec& u);

/// Positive dual cone K* = {x : <x,y> >= 0 for all y in K}; requires a cone.
Polyhedron dual_cone(const Polyhedron& k);

/// Largest linear subspace {x : c x in k for all rational c}; requires
/// 0 in k. Computed as the lineality space of the recession cone.
Polyhedron k0_subspace(const Polyhedron& k);

Polyhedron recession_cone(const Polyhedron& p);

SetOrder compare(const Polyhedron& a, const Polyhedron& b);
bool subset_of(const Polyhedron& a, const Polyhedron& b);

Polyhedron translate(const Polyhedron& p, const Vec& shift);
Polyhedron scale(const Rational& factor, const Polyhedron& p);
Polyhedron negate(const Polyhedron& p);

}  // namespace setcalc
