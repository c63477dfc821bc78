#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rsh/family.hpp"

namespace rsh {

// One named residual check: pass means the residual clears its tolerance.
struct CheckEntry {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// What was verified and with which settings, so a report is reproducible on
// its own. backend is "closed_form" or "finite_difference".
struct Provenance {
    FamilyParams params;
    double s_min = 0.0;
    double s_max = 0.0;
    int n = 0;
    std::string backend;
    std::string tool_version;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;
    Provenance provenance;

    void add(std::string name, double residual, double tolerance) {
        entries.push_back({std::move(name), residual, tolerance, residual <= tolerance});
    }

    bool overall() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const CheckEntry& e) { return e.pass; });
    }

    const CheckEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

}  // namespace rsh
