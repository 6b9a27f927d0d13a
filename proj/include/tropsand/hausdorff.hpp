#pragma once

#include <vector>

#include "tropsand/tropical_curve.hpp"

namespace tropsand {

/// Closed segment [a, b]; a == b is allowed and behaves as a point.
struct PlaneSegment {
    RationalPoint a;
    RationalPoint b;
};

/// Exact squared distance from p to the segment, rooted once at the end.
double point_segment_distance(const RationalPoint& p, const PlaneSegment& s);

/// sup over a in A of inf over b in B.
double directed_hausdorff(const std::vector<RationalPoint>& from, const std::vector<RationalPoint>& to);
double directed_hausdorff(const std::vector<RationalPoint>& from, const std::vector<PlaneSegment>& to);
/// Segments to points: each segment is sampled with spacing at most `spacing`, so the result is low by at
/// most spacing / 2.
double directed_hausdorff(const std::vector<PlaneSegment>& from, const std::vector<RationalPoint>& to, double spacing);

/// Symmetric Hausdorff distance. Throws AnalysisError(EmptySet) if either side is empty.
double hausdorff_distance(const std::vector<RationalPoint>& a, const std::vector<RationalPoint>& b);
double hausdorff_distance(const std::vector<RationalPoint>& a, const std::vector<PlaneSegment>& b, double spacing);

/// Bounded edges of the curve as segments. Throws TropicalError(UnboundedEdge) on rays and lines.
std::vector<PlaneSegment> curve_segments(const TropicalCurve& curve);

}  // namespace tropsand
