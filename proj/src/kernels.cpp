#include "pisot/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace pisot::kernels {

namespace {

bool covered(Point2 p, std::span<const Point2> ring, double eps) {
  if (point_in_ring(p, ring)) return true;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (segment_distance(p, ring[i], ring[i + 1]) <= eps) return true;
  }
  return n > 1 && segment_distance(p, ring[n - 1], ring[0]) <= eps;
}

std::size_t edge_count(std::span<const Point2> ring) {
  // a trailing copy of the first point closes the ring explicitly
  return ring.size() > 1 && ring.front() == ring.back() ? ring.size() - 1 : ring.size();
}

std::size_t crossings_from(std::span<const Point2> ring, std::size_t m, std::size_t i) {
  std::size_t c = 0;
  const Point2 p1 = ring[i], p2 = ring[(i + 1) % ring.size()];
  for (std::size_t j = i + 2; j < m; ++j) {
    if (i == 0 && j == m - 1) continue;  // adjacent through the closing vertex
    if (segments_cross(p1, p2, ring[j], ring[(j + 1) % ring.size()])) ++c;
  }
  return c;
}

}  // namespace

std::size_t count_covered_serial(std::span<const Point2> points, std::span<const Point2> ring,
                                 double eps) {
  std::size_t count = 0;
  for (Point2 p : points) count += covered(p, ring, eps) ? 1 : 0;
  return count;
}

std::size_t count_covered(std::span<const Point2> points, std::span<const Point2> ring,
                          double eps) {
  const auto n = static_cast<std::int64_t>(points.size());
  std::size_t count = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i) {
    count += covered(points[static_cast<std::size_t>(i)], ring, eps) ? 1 : 0;
  }
  return count;
}

double min_cross_distance_serial(std::span<const Point2> a, std::span<const Point2> b) {
  double best = std::numeric_limits<double>::infinity();
  for (Point2 p : a)
    for (Point2 q : b) best = std::min(best, norm(p - q));
  return best;
}

double min_cross_distance(std::span<const Point2> a, std::span<const Point2> b) {
  const auto n = static_cast<std::int64_t>(a.size());
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t i = 0; i < n; ++i) {
    const Point2 p = a[static_cast<std::size_t>(i)];
    for (Point2 q : b) best = std::min(best, norm(p - q));
  }
  return best;
}

std::size_t count_self_intersections_serial(std::span<const Point2> ring) {
  const std::size_t m = edge_count(ring);
  std::size_t c = 0;
  for (std::size_t i = 0; i < m; ++i) c += crossings_from(ring, m, i);
  return c;
}

std::size_t count_self_intersections(std::span<const Point2> ring) {
  const std::size_t m = edge_count(ring);
  std::size_t c = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : c)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
    c += crossings_from(ring, m, static_cast<std::size_t>(i));
  }
  return c;
}

std::optional<std::size_t> first_match_serial(std::size_t n,
                                              const std::function<bool(std::size_t)>& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_match(std::size_t n,
                                       const std::function<bool(std::size_t)>& pred) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t best = kNone;
#pragma omp parallel for schedule(dynamic, 32) reduction(min : best)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < best && pred(idx)) best = idx;
  }
  if (best == kNone) return std::nullopt;
  return best;
}

}  // namespace pisot::kernels
