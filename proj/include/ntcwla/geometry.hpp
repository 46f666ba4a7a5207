#pragma once

#include <array>
#include <optional>

namespace ntcwla {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(Point2D p, double s) { return {p.x * s, p.y * s}; }
inline bool operator==(Point2D a, Point2D b) { return a.x == b.x && a.y == b.y; }

double distance(Point2D a, Point2D b);

// Axis-aligned rectangle, bounds inclusive. Units are cm throughout.
struct TestArea {
    Point2D min;
    Point2D max;

    bool contains(Point2D p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
};

// Beacon position plus the distance measured to it; the trilateration primitive.
struct Circle {
    Point2D center;
    double radius_cm = 0.0;
};

enum class PairKind { Two, One, None };

// Intersection of one circle pair. When kind == Two the points are distinct
// and stored in lexicographic (x, y) order so downstream choices are
// reproducible run to run.
struct PairRelation {
    PairKind kind = PairKind::None;
    int point_count = 0;
    std::array<Point2D, 2> points{};

    bool intersects() const { return kind != PairKind::None; }
};

enum class TripleKind { CommonPoint, Region, Line, TwoOnly, NoIntersection };

// Pair relations of a triple (a,b,c): ab, bc, ac in that order.
struct TripleRelations {
    PairRelation ab;
    PairRelation bc;
    PairRelation ac;
};

// One triple's candidate position. mr_cm is the smallest of the triple's
// three radii and is the basis of the reference's fusion weight.
struct ReferenceCoordinate {
    Point2D point;
    double mr_cm = 0.0;
    std::array<int, 3> triple{0, 0, 0};
};

// Geometric tolerance (cm) for tangency, concentricity and common-point tests.
inline constexpr double kGeomEps = 1e-6;

PairRelation circle_pair(const Circle& a, const Circle& b, double eps = kGeomEps);

TripleKind classify_triple(const PairRelation& ab, const PairRelation& bc,
                           const PairRelation& ac, double eps = kGeomEps);

// Applies the per-case reference-coordinate rules. Returns nothing for
// NoIntersection triples. `ids` are carried into the result untouched.
std::optional<ReferenceCoordinate> triple_reference(const Circle& ca, const Circle& cb,
                                                    const Circle& cc, const TripleRelations& rel,
                                                    const TestArea& area, double eps = kGeomEps,
                                                    const std::array<int, 3>& ids = {0, 1, 2});

}  // namespace ntcwla
