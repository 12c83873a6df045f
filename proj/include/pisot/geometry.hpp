#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace pisot {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
  Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
  friend Point2 operator+(Point2 a, Point2 b) { return a += b; }
  friend Point2 operator-(Point2 a, Point2 b) { return a -= b; }
  friend Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

/// 2x2 real matrix acting on column points.
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  Point2 operator*(Point2 p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  double det() const { return a * d - b * c; }
  Mat2 power(int n) const;
};

using Polyline = std::vector<Point2>;

/// Distance from p to the closed segment [a, b].
double segment_distance(Point2 p, Point2 a, Point2 b);

/// Even-odd rule against the closed ring through `ring` (last point may repeat the first).
bool point_in_ring(Point2 p, std::span<const Point2> ring);

/// Proper crossing of [p1,p2] and [q1,q2]; touching or collinear overlap does not count.
bool segments_cross(Point2 p1, Point2 p2, Point2 q1, Point2 q2);

}  // namespace pisot
