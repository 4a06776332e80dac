#pragma once

#include "cgda.hpp"
#include "homotopy.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ghs {

// What the command line renders: one computed space.
struct OutputDocument {
    std::string space;
    std::string method;
    RankTable ranks;
    std::optional<bool> agreement;
    std::vector<std::string> notes;
};

inline OutputDocument to_document(const MethodReport& rep) {
    return OutputDocument{rep.space, rep.method, rep.ranks, rep.agreement, rep.notes};
}

// {"space":..., "method":..., "ranks":[{"q":..,"dim":..}...], "agreement":?,
//  "notes":[...]} with deterministic key order.
inline nlohmann::ordered_json to_json(const OutputDocument& doc) {
    nlohmann::ordered_json j;
    j["space"] = doc.space;
    j["method"] = doc.method;
    j["ranks"] = nlohmann::ordered_json::array();
    for (auto& [q, dim] : doc.ranks.dims)
        j["ranks"].push_back({{"q", q}, {"dim", dim}});
    if (doc.agreement.has_value())
        j["agreement"] = *doc.agreement;
    j["notes"] = doc.notes;
    return j;
}

inline std::string to_text(const OutputDocument& doc) {
    std::string out = doc.space + " [" + doc.method + "]";
    if (doc.agreement.has_value())
        out += *doc.agreement ? " (paths agree)" : " (PATHS DISAGREE)";
    out += "\n";
    if (doc.ranks.dims.empty()) {
        out += "  no nonzero rational homotopy groups\n";
        return out;
    }
    for (auto& [q, dim] : doc.ranks.dims) {
        out += "  q=" + std::to_string(q);
        if (dim != 1)
            out += " (dim " + std::to_string(dim) + ")";
        out += "\n";
    }
    return out;
}

// one-line row for table mode: "SU(4)/Sp(2): q=5 (dim 1)"
inline std::string to_table_line(const OutputDocument& doc) {
    std::string out = doc.space + ":";
    bool first = true;
    for (auto& [q, dim] : doc.ranks.dims) {
        out += first ? " " : ", ";
        first = false;
        out += "q=" + std::to_string(q) + " (dim " + std::to_string(dim) + ")";
    }
    if (doc.agreement.has_value() && !*doc.agreement)
        out += "  [PATHS DISAGREE]";
    return out;
}

}  // namespace ghs
