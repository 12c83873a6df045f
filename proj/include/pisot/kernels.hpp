#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

#include "pisot/geometry.hpp"

// Data-parallel inner loops. Each kernel has an OpenMP version and a
// `_serial` reference with identical results; tests compare the two.
namespace pisot::kernels {

/// Number of points inside the ring (even-odd) or within eps of its boundary.
std::size_t count_covered(std::span<const Point2> points, std::span<const Point2> ring, double eps);
std::size_t count_covered_serial(std::span<const Point2> points, std::span<const Point2> ring,
                                 double eps);

/// Smallest distance between a point of `a` and a point of `b`; +inf if either is empty.
double min_cross_distance(std::span<const Point2> a, std::span<const Point2> b);
double min_cross_distance_serial(std::span<const Point2> a, std::span<const Point2> b);

/// Number of properly crossing pairs of non-adjacent edges of a closed polyline.
std::size_t count_self_intersections(std::span<const Point2> ring);
std::size_t count_self_intersections_serial(std::span<const Point2> ring);

/// Smallest index in [0, n) satisfying `pred`, which must be safe to call
/// concurrently. The answer does not depend on the schedule.
std::optional<std::size_t> first_match(std::size_t n, const std::function<bool(std::size_t)>& pred);
std::optional<std::size_t> first_match_serial(std::size_t n,
                                              const std::function<bool(std::size_t)>& pred);

}  // namespace pisot::kernels
