#include "ntcwla/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ntcwla {

double distance(Point2D a, Point2D b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

bool lex_less(Point2D a, Point2D b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Point2D midpoint(Point2D a, Point2D b) {
    return {(a.x + b.x) * 0.5, (a.y + b.y) * 0.5};
}

}  // namespace

PairRelation circle_pair(const Circle& a, const Circle& b, double eps) {
    const double d = distance(a.center, b.center);
    const double sum = a.radius_cm + b.radius_cm;
    const double diff = std::fabs(a.radius_cm - b.radius_cm);

    if (d <= eps) return {};               // concentric (identical circles included)
    if (d > sum + eps) return {};          // separate
    if (d < diff - eps) return {};         // one inside the other

    const double ux = (b.center.x - a.center.x) / d;
    const double uy = (b.center.y - a.center.y) / d;
    // Signed distance from a.center to the chord along the center line.
    const double l = (a.radius_cm * a.radius_cm - b.radius_cm * b.radius_cm + d * d) / (2.0 * d);
    const Point2D base{a.center.x + l * ux, a.center.y + l * uy};

    if (std::fabs(d - sum) <= eps || std::fabs(d - diff) <= eps) {
        PairRelation rel;
        rel.kind = PairKind::One;
        rel.point_count = 1;
        rel.points[0] = base;
        return rel;
    }

    double h2 = a.radius_cm * a.radius_cm - l * l;
    if (h2 < 0.0) h2 = 0.0;
    const double h = std::sqrt(h2);

    Point2D p0{base.x - h * uy, base.y + h * ux};
    Point2D p1{base.x + h * uy, base.y - h * ux};
    if (lex_less(p1, p0)) std::swap(p0, p1);

    PairRelation rel;
    rel.kind = PairKind::Two;
    rel.point_count = 2;
    rel.points[0] = p0;
    rel.points[1] = p1;
    return rel;
}

namespace {

bool has_point_near(const PairRelation& rel, Point2D p, double eps) {
    for (int i = 0; i < rel.point_count; ++i) {
        if (distance(rel.points[i], p) <= eps) return true;
    }
    return false;
}

// A point on all three circles must appear in every pair's intersection set.
std::optional<Point2D> common_point(const PairRelation& ab, const PairRelation& bc,
                                    const PairRelation& ac, double eps) {
    for (int i = 0; i < ab.point_count; ++i) {
        const Point2D p = ab.points[i];
        if (has_point_near(bc, p, eps) && has_point_near(ac, p, eps)) return p;
    }
    return std::nullopt;
}

// Pick one point of a pair's intersection: a lone point stands; with two,
// prefer the one inside the test area, falling back to the one nearer the
// third circle's center when the area does not decide.
Point2D choose_point(const PairRelation& rel, Point2D third_center, const TestArea& area) {
    if (rel.point_count == 1) return rel.points[0];
    const Point2D p0 = rel.points[0];
    const Point2D p1 = rel.points[1];
    const bool in0 = area.contains(p0);
    const bool in1 = area.contains(p1);
    if (in0 != in1) return in0 ? p0 : p1;
    return distance(p0, third_center) <= distance(p1, third_center) ? p0 : p1;
}

Point2D closer_to(const PairRelation& rel, Point2D target) {
    if (rel.point_count == 1) return rel.points[0];
    return distance(rel.points[0], target) <= distance(rel.points[1], target) ? rel.points[0]
                                                                              : rel.points[1];
}

}  // namespace

TripleKind classify_triple(const PairRelation& ab, const PairRelation& bc,
                           const PairRelation& ac, double eps) {
    const int intersecting = static_cast<int>(ab.intersects()) + static_cast<int>(bc.intersects()) +
                             static_cast<int>(ac.intersects());
    switch (intersecting) {
        case 0:
            return TripleKind::NoIntersection;
        case 1:
            return TripleKind::TwoOnly;
        case 2:
            return TripleKind::Line;
        default:
            break;
    }
    if (common_point(ab, bc, ac, eps)) return TripleKind::CommonPoint;
    return TripleKind::Region;
}

std::optional<ReferenceCoordinate> triple_reference(const Circle& ca, const Circle& cb,
                                                    const Circle& cc, const TripleRelations& rel,
                                                    const TestArea& area, double eps,
                                                    const std::array<int, 3>& ids) {
    const TripleKind kind = classify_triple(rel.ab, rel.bc, rel.ac, eps);
    const double mr = std::min({ca.radius_cm, cb.radius_cm, cc.radius_cm});

    switch (kind) {
        case TripleKind::NoIntersection:
            return std::nullopt;

        case TripleKind::CommonPoint: {
            const auto p = common_point(rel.ab, rel.bc, rel.ac, eps);
            return ReferenceCoordinate{*p, mr, ids};
        }

        case TripleKind::Region: {
            const Point2D pa = choose_point(rel.ab, cc.center, area);
            const Point2D pb = choose_point(rel.bc, ca.center, area);
            const Point2D pc = choose_point(rel.ac, cb.center, area);
            const Point2D centroid{(pa.x + pb.x + pc.x) / 3.0, (pa.y + pb.y + pc.y) / 3.0};
            return ReferenceCoordinate{centroid, mr, ids};
        }

        case TripleKind::Line: {
            // The two intersecting pairs, each judged against the remaining circle.
            Point2D chosen[2];
            int n = 0;
            if (rel.ab.intersects()) chosen[n++] = choose_point(rel.ab, cc.center, area);
            if (rel.bc.intersects()) chosen[n++] = choose_point(rel.bc, ca.center, area);
            if (rel.ac.intersects() && n < 2) chosen[n++] = choose_point(rel.ac, cb.center, area);
            return ReferenceCoordinate{midpoint(chosen[0], chosen[1]), mr, ids};
        }

        case TripleKind::TwoOnly: {
            const PairRelation* pair = nullptr;
            const Circle* third = nullptr;
            if (rel.ab.intersects()) {
                pair = &rel.ab;
                third = &cc;
            } else if (rel.bc.intersects()) {
                pair = &rel.bc;
                third = &ca;
            } else {
                pair = &rel.ac;
                third = &cb;
            }
            const Point2D p = closer_to(*pair, third->center);
            const double d = distance(p, third->center);
            if (d > third->radius_cm) {
                // Walk from p toward the center until the circle is reached;
                // that crossing always sits strictly between the two.
                const double t = 1.0 - third->radius_cm / d;
                const Point2D q{p.x + t * (third->center.x - p.x),
                                p.y + t * (third->center.y - p.y)};
                return ReferenceCoordinate{midpoint(p, q), mr, ids};
            }
            // p already inside the third circle: no crossing between p and
            // the center, keep p itself.
            return ReferenceCoordinate{p, mr, ids};
        }
    }
    return std::nullopt;
}

}  // namespace ntcwla
