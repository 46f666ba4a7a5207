#include "ntcwla/rssi_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ntcwla/errors.hpp"

namespace ntcwla {

void PipelineConfig::validate() const {
    if (rpn < 1) throw ValidationError("pipeline.rpn must be >= 1");
    if (!(rr_dbm > mr_dbm)) throw ValidationError("pipeline.rr_dbm must exceed pipeline.mr_dbm");
    if (max_reliable && *max_reliable < 1) {
        throw ValidationError("pipeline.max_reliable must be >= 1 when set");
    }
}

RssiHistoryStore::RssiHistoryStore(const std::vector<int>& beacon_ids, const PipelineConfig& cfg)
    : rpn_(cfg.rpn), mr_dbm_(cfg.mr_dbm), ids_(beacon_ids) {
    cfg.validate();
    beacons_.resize(ids_.size());
    for (size_t i = 0; i < ids_.size(); ++i) {
        if (!index_.emplace(ids_[i], static_cast<int>(i)).second) {
            throw ValidationError("duplicate beacon id " + std::to_string(ids_[i]));
        }
        beacons_[i].fifo.reserve(rpn_);
    }
}

const RssiHistoryStore::BeaconHistory& RssiHistoryStore::at(int beacon_id) const {
    const auto it = index_.find(beacon_id);
    if (it == index_.end()) throw ValidationError("unknown beacon id " + std::to_string(beacon_id));
    return beacons_[it->second];
}

void RssiHistoryStore::ingest(int beacon_id, double rssi_dbm) {
    const auto it = index_.find(beacon_id);
    if (it == index_.end()) throw ValidationError("unknown beacon id " + std::to_string(beacon_id));
    if (!(rssi_dbm > mr_dbm_)) return;  // below or at MR: discarded

    BeaconHistory& h = beacons_[it->second];
    if (static_cast<int>(h.fifo.size()) < rpn_) {
        h.fifo.push_back(rssi_dbm);
        if (static_cast<int>(h.fifo.size()) == rpn_) h.full = true;
    } else {
        h.fifo.erase(h.fifo.begin());
        h.fifo.push_back(rssi_dbm);
    }
}

bool RssiHistoryStore::full(int beacon_id) const { return at(beacon_id).full; }

std::span<const double> RssiHistoryStore::history(int beacon_id) const {
    const auto& h = at(beacon_id);
    return {h.fifo.data(), h.fifo.size()};
}

double current_rssi(std::span<const double> history, int rpn) {
    if (rpn < 1) throw std::invalid_argument("rpn must be >= 1");
    if (static_cast<int>(history.size()) != rpn) {
        throw std::invalid_argument("history not full: have " + std::to_string(history.size()) +
                                    " of " + std::to_string(rpn));
    }
    // Oldest reading halves with rpn; each later one weighs 1/2^(rpn-j).
    double sum = std::ldexp(history[0], -(rpn - 1));
    for (int j = 1; j < rpn; ++j) sum += std::ldexp(history[j], -(rpn - j));
    return sum;
}

namespace {

struct Qualifier {
    int order;  // discovery order
    int beacon_id;
    double rssi;
};

std::vector<Qualifier> qualifying(const RssiHistoryStore& store, const PipelineConfig& cfg) {
    std::vector<Qualifier> out;
    int order = 0;
    for (int id : store.beacon_ids()) {
        if (store.full(id)) {
            const double cur = current_rssi(store.history(id), store.rpn());
            if (cur > cfg.rr_dbm) out.push_back({order++, id, cur});
        }
    }
    return out;
}

}  // namespace

std::vector<ReliableBeacon> select_reliable(const RssiHistoryStore& store,
                                            const PathLossParams& params,
                                            const PipelineConfig& cfg) {
    std::vector<Qualifier> q = qualifying(store, cfg);

    if (cfg.max_reliable && static_cast<int>(q.size()) > *cfg.max_reliable) {
        // Keep the strongest; equal strength falls back to discovery order.
        std::stable_sort(q.begin(), q.end(), [](const Qualifier& a, const Qualifier& b) {
            return a.rssi > b.rssi;
        });
        q.resize(*cfg.max_reliable);
        std::sort(q.begin(), q.end(),
                  [](const Qualifier& a, const Qualifier& b) { return a.order < b.order; });
    }

    std::vector<ReliableBeacon> out;
    out.reserve(q.size());
    for (const auto& e : q) {
        out.push_back({e.beacon_id, rssi_to_distance(params, e.rssi), e.rssi});
    }
    return out;
}

int count_reliable(const RssiHistoryStore& store, const PipelineConfig& cfg) {
    return static_cast<int>(qualifying(store, cfg).size());
}

}  // namespace ntcwla
