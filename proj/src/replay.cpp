#include "ntcwla/replay.hpp"

#include <cctype>
#include <fstream>
#include <string>

#include "ntcwla/errors.hpp"

namespace ntcwla {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::vector<ReplayPacket> parse_replay_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open replay file: " + path.string());
    const std::string file = path.string();

    std::vector<ReplayPacket> packets;
    std::string line;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        // Header line is optional.
        if (first_content) {
            first_content = false;
            if (trim(line) == "seq,beacon_id,rssi_dbm") continue;
        }

        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos ||
            line.find(',', c2 + 1) != std::string::npos) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": expected 'seq,beacon_id,rssi_dbm'");
        }
        const std::string seq_s = trim(line.substr(0, c1));
        const std::string id_s = trim(line.substr(c1 + 1, c2 - c1 - 1));
        const std::string rssi_s = trim(line.substr(c2 + 1));

        ReplayPacket pkt;
        try {
            size_t pos = 0;
            pkt.seq = std::stoll(seq_s, &pos);
            if (pos != seq_s.size()) throw std::invalid_argument(seq_s);
        } catch (const std::exception&) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": malformed seq '" + seq_s + "'");
        }

        if (id_s == "PERIOD") {
            pkt.period_marker = true;
            packets.push_back(pkt);
            continue;
        }
        try {
            size_t pos = 0;
            pkt.beacon_id = std::stoi(id_s, &pos);
            if (pos != id_s.size()) throw std::invalid_argument(id_s);
        } catch (const std::exception&) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": malformed beacon_id '" + id_s + "'");
        }
        try {
            size_t pos = 0;
            pkt.rssi_dbm = std::stod(rssi_s, &pos);
            if (pos != rssi_s.size()) throw std::invalid_argument(rssi_s);
        } catch (const std::exception&) {
            throw ValidationError(file + ": line " + std::to_string(lineno) +
                                  ": malformed rssi_dbm '" + rssi_s + "'");
        }
        packets.push_back(pkt);
    }

    if (packets.empty()) throw ValidationError(file + ": empty replay file");
    return packets;
}

std::vector<ReplayPeriodResult> run_replay(const std::vector<ReplayPacket>& packets,
                                           const PathLossParams& params,
                                           const std::map<int, Point2D>& beacon_positions,
                                           const TestArea& area, const PipelineConfig& pipeline,
                                           const LocalizerConfig& localizer) {
    std::vector<int> ids;
    ids.reserve(beacon_positions.size());
    for (const auto& [id, pos] : beacon_positions) ids.push_back(id);

    RssiHistoryStore store(ids, pipeline);
    std::vector<ReplayPeriodResult> out;
    int period = 0;
    int pending = 0;  // packets ingested since the last boundary

    const auto close_period = [&] {
        ++period;
        ReplayPeriodResult r;
        r.period = period;
        std::vector<ReliableBeacon> reliable = select_reliable(store, params, pipeline);
        r.ann = static_cast<int>(reliable.size());
        if (r.ann < localizer.min_reliable) {
            r.skip_reason = "too_few_reliable";
        } else if (auto res = localize(reliable, beacon_positions, area, localizer)) {
            r.result = std::move(res);
        } else {
            r.skip_reason = "no_references";
        }
        out.push_back(std::move(r));
        pending = 0;
    };

    for (const auto& pkt : packets) {
        if (pkt.period_marker) {
            close_period();
        } else {
            store.ingest(pkt.beacon_id, pkt.rssi_dbm);
            ++pending;
        }
    }
    if (pending > 0) close_period();  // trailing packets: implicit boundary at EOF
    return out;
}

}  // namespace ntcwla
