#include "setcalc/linalg.hpp"

#include <cassert>

namespace setcalc {

Rational dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

Vec vec_neg(const Vec& a) { return vec_scale(-1, a); }

bool lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

void normalize_ray(Vec& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (auto& x : v) {
    x *= den_lcm;
    x.canonicalize();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (num_gcd > 1)
    for (auto& x : v) {
      x /= num_gcd;
      x.canonicalize();
    }
}

void normalize_line(Vec& v) {
  normalize_ray(v);
  for (const auto& x : v) {
    if (x > 0) return;
    if (x < 0) {
      for (auto& y : v) y = -y;
      return;
    }
  }
}

std::vector<int> rref(std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const size_t dim = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < dim && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> nullspace(const std::vector<Vec>& rows_in, int dim) {
  std::vector<Vec> rows = rows_in;
  std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(dim, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    Vec v(dim, Rational(0));
    v[c] = 1;
    for (size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][c];
    normalize_line(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

void reduce_mod_span(Vec& v, const std::vector<Vec>& rref_rows, const std::vector<int>& pivots) {
  for (size_t r = 0; r < rref_rows.size(); ++r) {
    const Rational& f = v[pivots[r]];
    if (f == 0) continue;
    Rational c = f / rref_rows[r][pivots[r]];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rref_rows[r][j];
  }
}

Vec solve_square(std::vector<Vec> a, Vec b) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref(a);
  if (pivots.size() != n) return {};
  for (int p : pivots)
    if (p >= static_cast<int>(n)) return {};  // inconsistent
  Vec x(n, Rational(0));
  for (size_t r = 0; r < n; ++r) x[pivots[r]] = a[r][n];
  return x;
}

int rank(std::vector<Vec> rows) { return static_cast<int>(rref(rows).size()); }

}  // namespace setcalc
