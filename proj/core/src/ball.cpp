#include <cvxlab/geometry.hpp>
#include <cvxlab/tolerances.hpp>

#include <cmath>
#include <map>
#include <mutex>

namespace cvxlab {
namespace {

double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

std::vector<Vec> unit_directions(int dim, int count) {
  std::vector<Vec> dirs;
  if (dim == 1) {
    dirs.push_back(unit_vec(1, 0));
    dirs.push_back(-unit_vec(1, 0));
    return dirs;
  }
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      double a = 2.0 * M_PI * k / count;
      Vec v(2);
      v << std::cos(a), std::sin(a);
      dirs.push_back(v);
    }
    return dirs;
  }
  if (dim == 3) {
    // golden-spiral hemisphere, closed under x -> -x
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    int half = count / 2;
    for (int k = 0; k < half; ++k) {
      double z = (k + 0.5) / half;  // (0, 1]: one hemisphere
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double a = 2.0 * M_PI * k / golden;
      Vec v(3);
      v << r * std::cos(a), r * std::sin(a), z;
      dirs.push_back(v);
      dirs.push_back(-v);
    }
    return dirs;
  }
  // dim 4: quasirandom antipodal directions
  int half = count / 2;
  int index = 1;
  while (static_cast<int>(dirs.size()) < 2 * half) {
    Vec v(4);
    v << halton(index, 2) - 0.5, halton(index, 3) - 0.5, halton(index, 5) - 0.5,
        halton(index, 7) - 0.5;
    ++index;
    double n = v.norm();
    if (n < 0.05) continue;
    dirs.push_back(v / n);
    dirs.push_back(-v / n);
  }
  return dirs;
}

}  // namespace

const BallModel& ball_model(int dim, int generators) {
  static std::map<std::pair<int, int>, BallModel> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(dim, generators);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  BallModel model{Polyhedron::from_vrep(dim, unit_directions(dim, generators)),
                  0.0};
  double inr = kInf;
  for (const Halfspace& h : model.poly.hrep()) inr = std::min(inr, h.offset);
  model.inradius = inr;
  return cache.emplace(key, std::move(model)).first->second;
}

}  // namespace cvxlab
