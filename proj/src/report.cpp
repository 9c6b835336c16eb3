#include "nrc/report.hpp"

namespace nrc {

void CheckReport::add(CheckRecord rec) {
    pass = pass && rec.pass;
    // The headline worst/bound pair tracks the record with the least margin.
    double ratio = rec.bound > 0.0 ? rec.worst / rec.bound : 0.0;
    double current = bound > 0.0 ? worst_value / bound : -1.0;
    if (records.empty() || ratio > current) {
        worst_value = rec.worst;
        bound = rec.bound;
    }
    records.push_back(std::move(rec));
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["pass"] = pass;
    j["trials"] = trials;
    j["seed"] = seed;
    j["worst_value"] = worst_value;
    j["bound"] = bound;
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const CheckRecord& r : records) {
        nlohmann::ordered_json rec;
        rec["name"] = r.name;
        rec["pass"] = r.pass;
        rec["worst"] = r.worst;
        rec["bound"] = r.bound;
        if (!r.note.empty()) rec["note"] = r.note;
        recs.push_back(rec);
    }
    j["records"] = recs;
    return j;
}

}  // namespace nrc
