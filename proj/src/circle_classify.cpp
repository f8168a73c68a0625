#include "walls/circle_classify.hpp"

#include "walls/errors.hpp"
#include "walls/surd.hpp"

namespace walls {

std::string to_string(CircleRelation r) {
    switch (r) {
        case CircleRelation::Equal: return "equal";
        case CircleRelation::Nested: return "nested";
        case CircleRelation::InternallyTangent: return "internally-tangent";
        case CircleRelation::Intersecting: return "intersecting";
        case CircleRelation::ExternallyTangent: return "externally-tangent";
        case CircleRelation::Exterior: return "exterior";
    }
    return "?";
}

CircleRelation classify_circles(const Rat& c1, const Rat& r1sq, const Rat& c2, const Rat& r2sq) {
    if (r1sq <= 0 || r2sq <= 0)
        throw NonPositiveRadiusError("classify_circles requires positive squared radii");
    if (c1 == c2 && r1sq == r2sq) return CircleRelation::Equal;
    Rat dd = (c1 - c2) * (c1 - c2);
    Rat A = dd - r1sq - r2sq;
    Rat P = r1sq * r2sq;
    // dist^2 - (R1+R2)^2 = A - 2 sqrt(P)
    int outer = sign(Surd(A, Rat(-2), P));
    if (outer > 0) return CircleRelation::Exterior;
    if (outer == 0) return CircleRelation::ExternallyTangent;
    // dist^2 - (R1-R2)^2 = A + 2 sqrt(P)
    int inner = sign(Surd(A, Rat(2), P));
    if (inner > 0) return CircleRelation::Intersecting;
    if (inner == 0) return CircleRelation::InternallyTangent;
    return CircleRelation::Nested;
}

}  // namespace walls
