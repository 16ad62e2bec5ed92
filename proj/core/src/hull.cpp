// Origin-to-convex-hull distance for small planar point sets.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fieldclique/charsum.hpp"
#include "fieldclique/error.hpp"

namespace fieldclique::charsum {
namespace {

constexpr double kGeomEps = 1e-12;

struct Vertex {
  double x;
  double y;
  std::size_t index;  // position in the caller's point list
};

double cross(const Vertex& o, const Vertex& a, const Vertex& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; returns the strict hull counter-clockwise.
std::vector<Vertex> convex_hull(std::vector<Vertex> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vertex& a, const Vertex& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (pts.size() < 3) return pts;
  std::vector<Vertex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= kGeomEps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kGeomEps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

struct Closest {
  double distance;
  double t;  // closest point is (1 - t) a + t b
};

Closest closest_on_segment(const Vertex& a, const Vertex& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? -(a.x * dx + a.y * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return {std::hypot(a.x + t * dx, a.y + t * dy), t};
}

}  // namespace

EpsilonResult epsilon_star(std::span<const std::complex<double>> points) {
  if (points.empty()) raise(Errc::kInvalidArgument, "epsilon_star needs at least one point");
  EpsilonResult result;
  result.weights.assign(points.size(), 0.0);

  std::vector<Vertex> unique;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vertex v{points[i].real(), points[i].imag(), i};
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const Vertex& u) {
      return std::abs(u.x - v.x) <= kGeomEps && std::abs(u.y - v.y) <= kGeomEps;
    });
    if (!seen) unique.push_back(v);
  }

  if (unique.size() == 1) {
    result.epsilon_star = std::hypot(unique[0].x, unique[0].y);
    result.weights[unique[0].index] = 1.0;
    return result;
  }

  const auto hull = convex_hull(unique);
  if (hull.size() == 2) {
    const auto c = closest_on_segment(hull[0], hull[1]);
    result.epsilon_star = c.distance;
    result.weights[hull[0].index] = 1.0 - c.t;
    result.weights[hull[1].index] = c.t;
    return result;
  }

  const Vertex origin{0.0, 0.0, 0};
  const std::size_t h = hull.size();
  bool inside = true;
  for (std::size_t i = 0; i < h && inside; ++i) {
    if (cross(hull[i], hull[(i + 1) % h], origin) < -kGeomEps) inside = false;
  }

  if (inside) {
    result.epsilon_star = 0.0;
    // Fan triangulation from hull[0]; barycentric weights of the origin.
    for (std::size_t i = 1; i + 1 < h; ++i) {
      const Vertex& a = hull[0];
      const Vertex& b = hull[i];
      const Vertex& c = hull[i + 1];
      const double area = cross(a, b, c);
      const double wa = cross(origin, b, c) / area;
      const double wb = cross(a, origin, c) / area;
      const double wc = cross(a, b, origin) / area;
      if (wa >= -kGeomEps && wb >= -kGeomEps && wc >= -kGeomEps) {
        result.weights[a.index] = std::max(wa, 0.0);
        result.weights[b.index] = std::max(wb, 0.0);
        result.weights[c.index] = std::max(wc, 0.0);
        const double total = result.weights[a.index] + result.weights[b.index] +
                             result.weights[c.index];
        for (auto idx : {a.index, b.index, c.index}) result.weights[idx] /= total;
        return result;
      }
    }
    // Unreachable for a convex polygon containing the origin.
    raise(Errc::kInvalidArgument, "failed to locate the origin in the hull triangulation");
  }

  std::size_t best_edge = 0;
  Closest best{INFINITY, 0.0};
  for (std::size_t i = 0; i < h; ++i) {
    const auto c = closest_on_segment(hull[i], hull[(i + 1) % h]);
    if (c.distance < best.distance) {
      best = c;
      best_edge = i;
    }
  }
  result.epsilon_star = best.distance;
  result.weights[hull[best_edge].index] = 1.0 - best.t;
  result.weights[hull[(best_edge + 1) % h].index] += best.t;
  return result;
}

}  // namespace fieldclique::charsum
