#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace nrc {

struct CheckRecord {
    std::string name;
    bool pass = false;
    double worst = 0.0;   // worst observed value for this sub-check
    double bound = 0.0;   // bound it was compared against
    std::string note;
};

// Machine-readable outcome of a property/acceptance suite.  A report fails
// iff any record fails.
struct CheckReport {
    std::string suite;
    bool pass = true;
    int trials = 0;
    std::uint64_t seed = 0;
    double worst_value = 0.0;
    double bound = 0.0;
    std::vector<CheckRecord> records;

    void add(CheckRecord rec);
    nlohmann::ordered_json to_json() const;
};

}  // namespace nrc
