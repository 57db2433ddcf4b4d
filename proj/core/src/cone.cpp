#include "cone.hpp"

#include <cvxlab/tolerances.hpp>

#include <algorithm>
#include <cstdint>

namespace cvxlab::detail {
namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, int i) { b[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

bool superset(const Bits& a, const Bits& b) {
  // a >= b bitwise
  for (size_t w = 0; w < a.size(); ++w)
    if ((a[w] & b[w]) != b[w]) return false;
  return true;
}

Bits intersect_bits(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (size_t w = 0; w < a.size(); ++w) r[w] = a[w] & b[w];
  return r;
}

struct Ray {
  Vec v;
  Bits tight;
};

// Deterministic orthonormalization of the line space; keeps results canonical
// so structural comparisons work across construction routes.
std::vector<Vec> orthonormalize(std::vector<Vec> basis) {
  std::vector<Vec> out;
  for (Vec& v : basis) {
    for (const Vec& u : out) v -= u.dot(v) * u;
    double n = v.norm();
    if (n > 1e-12) out.push_back(v / n);
  }
  // canonical sign: first significant entry positive
  for (Vec& u : out) {
    for (int i = 0; i < u.size(); ++i) {
      if (std::abs(u[i]) > 1e-9) {
        if (u[i] < 0) u = -u;
        break;
      }
    }
  }
  return out;
}

}  // namespace

ConeGenerators cone_generators(std::vector<Vec> rows, int dim) {
  const double tol = geom_tol();
  const int m = static_cast<int>(rows.size());
  const size_t words = static_cast<size_t>((m + 63) / 64);

  for (Vec& r : rows) {
    double n = r.norm();
    if (n > 0) r /= n;
  }

  std::vector<Vec> lin;
  lin.reserve(dim);
  for (int i = 0; i < dim; ++i) lin.push_back(unit_vec(dim, i));
  std::vector<Ray> rays;

  for (int j = 0; j < m; ++j) {
    const Vec& a = rows[j];
    if (a.norm() <= tol) continue;  // trivial row

    // Try to cut the lineality space first.
    int pivot = -1;
    double best = tol;
    for (size_t i = 0; i < lin.size(); ++i) {
      double s = std::abs(a.dot(lin[i]));
      if (s > best) {
        best = s;
        pivot = static_cast<int>(i);
      }
    }
    if (pivot >= 0) {
      Vec l0 = lin[pivot];
      double s0 = a.dot(l0);
      if (s0 < 0) {
        l0 = -l0;
        s0 = -s0;
      }
      lin.erase(lin.begin() + pivot);
      for (Vec& l : lin) {
        l -= (a.dot(l) / s0) * l0;
        double n = l.norm();
        if (n > tol) l /= n;
      }
      for (Ray& r : rays) {
        r.v -= (a.dot(r.v) / s0) * l0;
        double n = r.v.norm();
        if (n > tol) r.v /= n;
        set_bit(r.tight, j);
      }
      Ray fresh;
      fresh.v = -l0;
      fresh.v /= fresh.v.norm();
      fresh.tight.assign(words, 0);
      for (int i = 0; i < j; ++i) set_bit(fresh.tight, i);
      rays.push_back(std::move(fresh));
      continue;
    }

    // Lineality is inside the hyperplane; split the rays.
    std::vector<int> plus, minus;
    std::vector<double> s(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = a.dot(rays[i].v);
      if (s[i] > tol)
        plus.push_back(static_cast<int>(i));
      else if (s[i] < -tol)
        minus.push_back(static_cast<int>(i));
      else
        set_bit(rays[i].tight, j);
    }
    if (plus.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size() + plus.size() * minus.size());
    for (size_t i = 0; i < rays.size(); ++i)
      if (s[i] <= tol) next.push_back(rays[i]);

    for (int p : plus) {
      for (int n : minus) {
        Bits z = intersect_bits(rays[p].tight, rays[n].tight);
        bool adjacent = true;
        for (size_t r = 0; r < rays.size(); ++r) {
          if (static_cast<int>(r) == p || static_cast<int>(r) == n) continue;
          if (superset(rays[r].tight, z)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray w;
        w.v = s[p] * rays[n].v - s[n] * rays[p].v;
        double norm = w.v.norm();
        if (norm <= tol) continue;
        w.v /= norm;
        w.tight = std::move(z);
        set_bit(w.tight, j);
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lines = orthonormalize(std::move(lin));

  // Canonical ray representatives: projected off the line space, unit,
  // de-duplicated, sorted.
  for (Ray& r : rays) {
    Vec v = r.v;
    for (const Vec& u : out.lines) v -= u.dot(v) * u;
    double n = v.norm();
    if (n <= tol) continue;
    out.rays.push_back(v / n);
  }
  lex_sort(out.rays);
  std::vector<Vec> dedup;
  for (const Vec& v : out.rays) {
    if (dedup.empty() || !approx_vec(dedup.back(), v, tol)) dedup.push_back(v);
  }
  out.rays = std::move(dedup);
  return out;
}

}  // namespace cvxlab::detail
