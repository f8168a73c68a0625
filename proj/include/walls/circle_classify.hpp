#pragma once

#include "walls/rational.hpp"

#include <string>

namespace walls {

// Mutual position of two circles with centres (c,0) on the axis, given by
// centre and squared radius.
enum class CircleRelation {
    Equal,
    Nested,  // one open disk strictly contains the other circle
    InternallyTangent,
    Intersecting,
    ExternallyTangent,
    Exterior,
};

std::string to_string(CircleRelation r);

// Exact classification via sign-aware squaring of
//   (c1-c2)^2  vs  r1sq + r2sq +- 2 sqrt(r1sq*r2sq).
// Throws NonPositiveRadiusError unless both squared radii are positive.
CircleRelation classify_circles(const Rat& c1, const Rat& r1sq, const Rat& c2, const Rat& r2sq);

}  // namespace walls
