#include "helberg/serialize.hpp"

#include <sstream>

namespace helberg {

std::string to_decimal(const Int& v) { return v.str(); }

nlohmann::json to_json(const SizeSearchResult& result) {
    nlohmann::json j{
        {"q", result.q},
        {"d", result.d},
        {"n", result.n},
        {"m", to_decimal(result.m)},
        {"max_size", result.max_size},
    };
    auto residues = nlohmann::json::array();
    for (const Int& r : result.argmax_residues) {
        residues.push_back(to_decimal(r));
    }
    j["argmax_residues"] = std::move(residues);
    if (result.per_residue_sizes) {
        auto rows = nlohmann::json::array();
        for (const auto& [residue, count] : *result.per_residue_sizes) {
            rows.push_back({{"r", to_decimal(residue)}, {"size", count}});
        }
        j["per_residue_sizes"] = std::move(rows);
    }
    return j;
}

std::string to_csv_row(const SizeSearchResult& result) {
    std::string row =
        std::to_string(result.n) + "," + std::to_string(result.max_size) + ",";
    for (std::size_t i = 0; i < result.argmax_residues.size(); ++i) {
        if (i > 0) {
            row.push_back(';');
        }
        row += to_decimal(result.argmax_residues[i]);
    }
    return row;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j{
        {"q", report.q},
        {"d", report.d},
        {"n", report.n},
        {"m", to_decimal(report.m)},
        {"r", to_decimal(report.r)},
        {"members", report.members},
        {"deleted_words", report.deleted_words},
        {"pass", report.pass()},
    };
    auto rows = nlohmann::json::array();
    for (const Counterexample& ce : report.counterexamples) {
        rows.push_back({{"x", format_word(report.q, ce.x)},
                        {"y", format_word(report.q, ce.y)},
                        {"from_x", ce.from_x.to_string()},
                        {"from_y", ce.from_y.to_string()}});
    }
    j["counterexamples"] = std::move(rows);
    return j;
}

nlohmann::json to_json(const DecodeTrace& trace) {
    auto lines = nlohmann::json::array();
    std::istringstream in(trace.to_text());
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return nlohmann::json{{"initial_index", to_decimal(trace.initial_index)},
                          {"steps", std::move(lines)}};
}

}  // namespace helberg
