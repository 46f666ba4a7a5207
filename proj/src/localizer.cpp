#include "ntcwla/localizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ntcwla/errors.hpp"

namespace ntcwla {

void LocalizerConfig::validate() const {
    if (!(filter_threshold_cm > 0.0)) {
        throw ValidationError("localizer.filter_threshold_cm must be > 0");
    }
    if (min_reliable < 3) throw ValidationError("localizer.min_reliable must be >= 3");
}

std::vector<double> reference_weights(const std::vector<ReferenceCoordinate>& refs) {
    if (refs.empty()) throw std::invalid_argument("reference_weights: empty reference list");
    double recip_sum = 0.0;
    for (const auto& r : refs) {
        if (!(r.mr_cm > 0.0)) throw std::invalid_argument("reference_weights: mr must be > 0");
        recip_sum += 1.0 / r.mr_cm;
    }
    std::vector<double> w;
    w.reserve(refs.size());
    for (const auto& r : refs) w.push_back((1.0 / r.mr_cm) / recip_sum);
    return w;
}

Point2D weighted_position(const std::vector<ReferenceCoordinate>& refs,
                          const std::vector<double>& weights) {
    if (refs.size() != weights.size()) {
        throw std::invalid_argument("weighted_position: length mismatch");
    }
    double total = 0.0;
    for (double w : weights) total += w;
    if (std::fabs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("weighted_position: weights must sum to 1");
    }
    Point2D p{0.0, 0.0};
    for (size_t i = 0; i < refs.size(); ++i) {
        p.x += refs[i].point.x * weights[i];
        p.y += refs[i].point.y * weights[i];
    }
    return p;
}

std::vector<ReferenceCoordinate> filter_references(const std::vector<ReferenceCoordinate>& refs,
                                                   Point2D anchor, double threshold_cm) {
    if (refs.empty()) throw std::invalid_argument("filter_references: empty reference list");
    if (!(threshold_cm > 0.0)) throw std::invalid_argument("filter_references: threshold must be > 0");

    std::vector<ReferenceCoordinate> kept;
    for (const auto& r : refs) {
        if (distance(r.point, anchor) <= threshold_cm) kept.push_back(r);
    }
    if (kept.empty()) {
        // Keep the single nearest reference so the period still yields output.
        const auto it = std::min_element(refs.begin(), refs.end(),
                                         [&](const ReferenceCoordinate& a,
                                             const ReferenceCoordinate& b) {
                                             return distance(a.point, anchor) <
                                                    distance(b.point, anchor);
                                         });
        kept.push_back(*it);
    }
    return kept;
}

std::optional<LocalizationResult> localize(const std::vector<ReliableBeacon>& reliable,
                                           const std::map<int, Point2D>& beacon_positions,
                                           const TestArea& area, const LocalizerConfig& cfg) {
    cfg.validate();
    const int ann = static_cast<int>(reliable.size());
    if (ann < cfg.min_reliable) return std::nullopt;

    std::vector<Circle> circles;
    std::vector<int> ids;
    circles.reserve(ann);
    ids.reserve(ann);
    for (const auto& rb : reliable) {
        const auto it = beacon_positions.find(rb.beacon_index);
        if (it == beacon_positions.end()) {
            throw ValidationError("no position for beacon id " + std::to_string(rb.beacon_index));
        }
        circles.push_back({it->second, rb.measured_distance_cm});
        ids.push_back(rb.beacon_index);
    }
    for (int i = 0; i < ann; ++i) {
        for (int j = i + 1; j < ann; ++j) {
            if (circles[i].center == circles[j].center) {
                throw ValidationError("beacon positions must be distinct");
            }
        }
    }

    LocalizationResult res;
    res.beacons_used = ids;

    // Triples in lexicographic index order keep the aggregation reproducible.
    for (int i = 0; i < ann - 2; ++i) {
        for (int j = i + 1; j < ann - 1; ++j) {
            for (int k = j + 1; k < ann; ++k) {
                ++res.n_triples;
                TripleRelations rel;
                rel.ab = circle_pair(circles[i], circles[j]);
                rel.bc = circle_pair(circles[j], circles[k]);
                rel.ac = circle_pair(circles[i], circles[k]);
                auto ref = triple_reference(circles[i], circles[j], circles[k], rel, area,
                                            kGeomEps, {ids[i], ids[j], ids[k]});
                if (ref) res.references.push_back(*ref);
            }
        }
    }

    res.n_references = static_cast<int>(res.references.size());
    if (res.references.empty()) return std::nullopt;

    const std::vector<double> w1 = reference_weights(res.references);
    const Point2D first_pass = weighted_position(res.references, w1);

    const std::vector<ReferenceCoordinate> kept =
        filter_references(res.references, first_pass, cfg.filter_threshold_cm);
    res.n_after_filter = static_cast<int>(kept.size());

    const std::vector<double> w2 = reference_weights(kept);
    res.estimate = weighted_position(kept, w2);
    return res;
}

}  // namespace ntcwla
