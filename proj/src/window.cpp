#include "pisot/window.hpp"

#include <algorithm>
#include <cmath>

#include "pisot/error.hpp"
#include "pisot/kernels.hpp"
#include "pisot/nielsen.hpp"
#include "pisot/tiling.hpp"

namespace pisot {

namespace {

constexpr double kCloseTol = 1e-9;

Point2 mean(std::span<const Point2> pts) {
  Point2 m;
  for (Point2 p : pts) m += p;
  return (1.0 / static_cast<double>(pts.size())) * m;
}

}  // namespace

Endomorphism boundary_endomorphism(const Substitution& sigma) {
  const auto inv = invert_automorphism(sigma.map());
  if (!inv) {
    throw Error(ErrorCode::not_invertible,
                "no inverse of " + sigma.str() + " found within the search depth");
  }
  return reverse_endomorphism(*inv);
}

std::array<BoundaryPath, 3> canonical_seeds(const Cps&) {
  return {BoundaryPath{0, Word::parse("bcBC"), {}}, BoundaryPath{1, Word::parse("caCA"), {}},
          BoundaryPath{2, Word::parse("abAB"), {}}};
}

Polyline trace_path(const Word& word, const Cps& cps, Point2 base) {
  Polyline pts;
  pts.reserve(word.size() + 1);
  pts.push_back(base);
  Point2 cur = base;
  for (Letter l : word) {
    const Point2 step = cps.star_letter(l.gen);
    if (l.inverse) cur -= step; else cur += step;
    pts.push_back(cur);
  }
  return pts;
}

WindowApprox iterate_window(const Endomorphism& sigma_b, const std::array<BoundaryPath, 3>& seeds,
                            int n, const Cps& cps) {
  if (n < 0 || n > kMaxWindowIterations) {
    throw Error(ErrorCode::invalid_argument,
                "window iteration " + std::to_string(n) + " outside [0, 12]");
  }
  WindowApprox wa;
  wa.iteration = n;
  const Mat2 scale = cps.a_w().power(n);

  // subwindows are independent
#pragma omp parallel for schedule(static, 1)
  for (int i = 0; i < 3; ++i) {
    const auto& seed = seeds[static_cast<std::size_t>(i)];
    Word w = seed.word;
    for (int step = 0; step < n; ++step) w = sigma_b.apply(w);
    Polyline pts = trace_path(w, cps, seed.base);
    for (Point2& p : pts) p = scale * p;
    wa.words[static_cast<std::size_t>(seed.letter)] = std::move(w);
    wa.boundaries[static_cast<std::size_t>(seed.letter)] = std::move(pts);
  }
  for (std::size_t i = 0; i < 3; ++i) wa.areas[i] = polygon_area(wa.boundaries[i]);
  return wa;
}

double signed_polygon_area(std::span<const Point2> polyline) {
  if (polyline.size() < 2) return 0.0;
  if (norm(polyline.front() - polyline.back()) > kCloseTol) {
    throw Error(ErrorCode::not_closed, "polyline endpoints differ");
  }
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) s += cross(polyline[i], polyline[i + 1]);
  return 0.5 * s;
}

double polygon_area(std::span<const Point2> polyline) {
  return std::fabs(signed_polygon_area(polyline));
}

Point2 polygon_centroid(std::span<const Point2> polyline) {
  if (polyline.empty()) return {};
  const double a = signed_polygon_area(polyline);
  if (std::fabs(a) < 1e-15) return mean(polyline);
  Point2 c;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const double w = cross(polyline[i], polyline[i + 1]);
    c += w * (polyline[i] + polyline[i + 1]);
  }
  return (1.0 / (6.0 * a)) * c;
}

double max_segment_length(const WindowApprox& wa) {
  double m = 0.0;
  for (const auto& pl : wa.boundaries)
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) m = std::max(m, norm(pl[i + 1] - pl[i]));
  return m;
}

PointClouds point_cloud_window(const Substitution& sigma, const Cps& cps, int depth) {
  if (depth < 0) throw Error(ErrorCode::invalid_argument, "negative depth");
  const Seed seed = find_periodic_seed(sigma);
  const Word w = level_word(sigma, seed.letter, depth);
  PointClouds clouds;
  IntVector3 v{0, 0, 0};
  for (Letter l : w) {
    clouds[l.gen].push_back(cps.star(v));
    v[l.gen] += 1;
  }
  return clouds;
}

double ContainmentReport::min_fraction() const {
  return *std::min_element(fraction.begin(), fraction.end());
}

ContainmentReport containment_check(const WindowApprox& wa, const PointClouds& clouds, double eps) {
  ContainmentReport report;
  report.eps = eps;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& cloud = clouds[i];
    report.points[i] = cloud.size();
    if (cloud.empty()) {
      report.fraction[i] = 1.0;
      report.vacuous[i] = true;
      continue;
    }
    Polyline ring;
    ring.reserve(wa.boundaries[i].size());
    for (Point2 p : wa.boundaries[i]) ring.push_back(-p);
    const Point2 shift = mean(cloud) - polygon_centroid(ring);
    for (Point2& p : ring) p += shift;
    report.covered[i] = kernels::count_covered(cloud, ring, eps);
    report.fraction[i] = static_cast<double>(report.covered[i]) / static_cast<double>(cloud.size());
  }
  return report;
}

}  // namespace pisot
