#pragma once

#include <array>
#include <vector>

#include "pisot/cps.hpp"
#include "pisot/geometry.hpp"
#include "pisot/word.hpp"

namespace pisot {

inline constexpr int kMaxWindowIterations = 12;

/// Closed edge path in internal space; letter g with sign s moves by s*star(e_g).
struct BoundaryPath {
  int letter = 0;
  Word word;
  Point2 base;
};

struct WindowApprox {
  int iteration = 0;
  std::array<Word, 3> words;
  std::array<Polyline, 3> boundaries;
  std::array<double, 3> areas{};
};

/// Reverse of the inverse automorphism. Throws NotInvertible.
Endomorphism boundary_endomorphism(const Substitution& sigma);

/// Commutator paths bcBC, caCA, abAB around the canonical parallelograms.
std::array<BoundaryPath, 3> canonical_seeds(const Cps& cps);

/// Vertices of the path of `word` starting at `base`, the endpoint included.
Polyline trace_path(const Word& word, const Cps& cps, Point2 base = {});

/// Applies sigma_b n times to each seed, traces the paths and rescales by a_w^n.
/// Throws InvalidArgument for n outside [0, 12].
WindowApprox iterate_window(const Endomorphism& sigma_b, const std::array<BoundaryPath, 3>& seeds,
                            int n, const Cps& cps);

/// Absolute shoelace area; throws NotClosed if the endpoints differ by more than 1e-9.
double polygon_area(std::span<const Point2> polyline);
double signed_polygon_area(std::span<const Point2> polyline);
/// Area centroid of a closed polyline (vertex mean if the area vanishes).
Point2 polygon_centroid(std::span<const Point2> polyline);

double max_segment_length(const WindowApprox& wa);

using PointClouds = std::array<std::vector<Point2>, 3>;

/// Internal-space images of the tile left endpoints of sigma^depth(seed letter),
/// grouped by tile letter.
PointClouds point_cloud_window(const Substitution& sigma, const Cps& cps, int depth);

struct ContainmentReport {
  std::array<double, 3> fraction{};
  std::array<std::size_t, 3> points{};
  std::array<std::size_t, 3> covered{};
  /// Set for letters whose cloud is empty (fraction reported as 1).
  std::array<bool, 3> vacuous{};
  double eps = 0.0;

  double min_fraction() const;
};

/// Fraction of each cloud lying in (or within eps of) its subwindow.
/// The boundary iterates describe the tiling read right to left, so each
/// polyline is point-reflected before its area centroid is moved onto the
/// cloud mean.
ContainmentReport containment_check(const WindowApprox& wa, const PointClouds& clouds, double eps);

}  // namespace pisot
