#pragma once

#include "setcalc/rational.hpp"

namespace setcalc {

Rational dot(const Vec& a, const Vec& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
Vec vec_neg(const Vec& a);

/// Strict lexicographic order; vectors of equal length assumed.
bool lex_less(const Vec& a, const Vec& b);

/// Scales v by a positive rational so that entries are coprime integers.
/// The zero vector is left alone. Directions (rays, half-space rows) compare
/// equal after this exactly when they differ by a positive factor.
void normalize_ray(Vec& v);

/// normalize_ray plus a sign flip making the first nonzero entry positive.
/// Canonical for sign-symmetric directions (lines, equality rows).
void normalize_line(Vec& v);

/// In-place reduced row echelon form with unit pivots. Returns the pivot
/// column of each surviving row; zero rows are dropped.
std::vector<int> rref(std::vector<Vec>& rows);

/// Basis of {x : rows * x = 0}, each vector normalize_line-canonical.
std::vector<Vec> nullspace(const std::vector<Vec>& rows, int dim);

/// Subtracts multiples of the RREF rows so that v vanishes on every pivot
/// column. Canonical coset representative modulo the row span.
void reduce_mod_span(Vec& v, const std::vector<Vec>& rref_rows, const std::vector<int>& pivots);

/// Solves square A x = b by Gaussian elimination; returns empty if singular.
Vec solve_square(std::vector<Vec> a, Vec b);

int rank(std::vector<Vec> rows);

}  // namespace setcalc
