#include "setcalc/dd.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace setcalc {

int default_ray_budget() {
  static int budget = [] {
    if (const char* env = std::getenv("SETCALC_RAY_BUDGET")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 5000;
  }();
  return budget;
}

namespace {

struct Ray {
  Vec v;
  std::vector<char> tight;  // processed constraint index -> <h,v> == 0
};

// Zero set of (p,n) contained in the zero set of some third ray means the
// pair does not span a 2-face; see Fukuda & Prodon on the combinatorial
// adjacency test.
bool adjacent(const std::vector<Ray>& rays, size_t p, size_t n) {
  const auto& tp = rays[p].tight;
  const auto& tn = rays[n].tight;
  for (size_t j = 0; j < rays.size(); ++j) {
    if (j == p || j == n) continue;
    const auto& tj = rays[j].tight;
    bool contains = true;
    for (size_t c = 0; c < tp.size() && contains; ++c)
      if (tp[c] && tn[c] && !tj[c]) contains = false;
    if (contains) return false;
  }
  return true;
}

}  // namespace

ConeDescription dual_description(std::vector<Vec> normals, int dim, int budget) {
  if (budget <= 0) budget = default_ray_budget();
  for (const auto& h : normals)
    if (static_cast<int>(h.size()) != dim) throw std::invalid_argument("normal width mismatch");

  // Deduplicate up to positive scaling; the cone is insertion-order
  // independent, so dedup only trims work.
  for (auto& h : normals) normalize_ray(h);
  std::sort(normals.begin(), normals.end(), lex_less);
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  std::erase_if(normals, [](const Vec& h) { return is_zero(h); });

  std::vector<Vec> lines;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  std::vector<Vec> processed;

  for (const auto& h : normals) {
    int pivot = -1;
    for (size_t i = 0; i < lines.size(); ++i)
      if (dot(h, lines[i]) != 0) {
        pivot = static_cast<int>(i);
        break;
      }

    if (pivot >= 0) {
      // The constraint cuts the lineality space: split off one line and
      // shift everything else into its kernel. l0 is orthogonal to every
      // processed constraint, so existing tight sets survive the shift.
      Vec l0 = lines[pivot];
      Rational s = dot(h, l0);
      if (s < 0) {
        l0 = vec_neg(l0);
        s = -s;
      }
      lines.erase(lines.begin() + pivot);
      for (auto& l : lines) {
        Rational c = dot(h, l) / s;
        if (c != 0) l = vec_sub(l, vec_scale(c, l0));
        normalize_line(l);
      }
      for (auto& r : rays) {
        Rational c = dot(h, r.v) / s;
        if (c != 0) r.v = vec_sub(r.v, vec_scale(c, l0));
        normalize_ray(r.v);
        r.tight.push_back(1);
      }
      Ray nr;
      normalize_ray(l0);
      nr.v = std::move(l0);
      nr.tight.assign(processed.size(), 1);
      nr.tight.push_back(0);
      rays.push_back(std::move(nr));
      processed.push_back(h);
      continue;
    }

    std::vector<size_t> pos, neg;
    std::vector<Rational> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h, rays[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
    }
    if (neg.empty()) {
      for (size_t i = 0; i < rays.size(); ++i) rays[i].tight.push_back(val[i] == 0);
      processed.push_back(h);
      continue;
    }

    std::vector<Ray> fresh;
    for (size_t p : pos)
      for (size_t n : neg) {
        if (!adjacent(rays, p, n)) continue;
        Ray w;
        w.v = vec_sub(vec_scale(val[p], rays[n].v), vec_scale(val[n], rays[p].v));
        normalize_ray(w.v);
        w.tight.resize(processed.size() + 1);
        for (size_t c = 0; c < processed.size(); ++c) w.tight[c] = dot(processed[c], w.v) == 0;
        w.tight[processed.size()] = 1;
        fresh.push_back(std::move(w));
      }

    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) {
        next.push_back(std::move(rays[i]));
        next.back().tight.push_back(val[i] == 0);
      }
    for (auto& w : fresh) next.push_back(std::move(w));
    if (static_cast<int>(next.size()) > budget)
      throw RayBudgetExceeded("double description ray budget exceeded");
    rays = std::move(next);
    processed.push_back(h);
  }

  ConeDescription out;
  out.lines = std::move(lines);
  std::vector<int> pivots = rref(out.lines);
  for (auto& r : rays) {
    reduce_mod_span(r.v, out.lines, pivots);
    normalize_ray(r.v);
    assert(!is_zero(r.v));
    out.rays.push_back(std::move(r.v));
  }
  for (auto& l : out.lines) normalize_line(l);
  std::sort(out.lines.begin(), out.lines.end(), lex_less);
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace setcalc
