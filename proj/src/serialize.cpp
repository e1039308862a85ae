#include "lrc/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lrc {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "lrc-code-v1";

json field_to_json(const Field& field) {
    json j;
    j["p"] = field.characteristic();
    j["m"] = field.degree();
    if (field.degree() > 1) j["modulus"] = field.modulus();
    return j;
}

FieldPtr field_from_json(const json& j) {
    const uint64_t p = j.at("p").get<uint64_t>();
    const uint32_t m = j.at("m").get<uint32_t>();
    if (j.contains("modulus")) {
        return Field::make(p, m, j.at("modulus").get<std::vector<uint32_t>>());
    }
    return Field::make(p, m);
}

}  // namespace

std::string code_to_json(const LinearCode& code, const LocalityStructure* locality) {
    json j;
    j["format"] = kFormatTag;
    j["field"] = field_to_json(*code.field());
    j["n"] = code.length();
    j["k"] = code.dimension();
    json rows = json::array();
    for (size_t i = 0; i < code.dimension(); ++i) {
        json row = json::array();
        for (size_t c = 0; c < code.length(); ++c) row.push_back(code.generator().raw(i, c));
        rows.push_back(std::move(row));
    }
    j["generator"] = std::move(rows);
    if (locality != nullptr) {
        json loc;
        loc["r"] = locality->r;
        loc["delta"] = locality->delta;
        loc["groups"] = locality->groups;
        j["locality"] = std::move(loc);
    }
    return j.dump(2) + "\n";
}

CodeDocument code_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed code file: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != kFormatTag) {
            throw std::invalid_argument("unknown code file format tag");
        }
        FieldPtr field = field_from_json(j.at("field"));
        const size_t n = j.at("n").get<size_t>();
        const size_t k = j.at("k").get<size_t>();
        const auto rows = j.at("generator").get<std::vector<std::vector<uint32_t>>>();
        if (rows.size() != k) throw std::invalid_argument("generator row count does not match k");
        for (const auto& row : rows) {
            if (row.size() != n) throw std::invalid_argument("generator row length does not match n");
        }
        LinearCode code{Matrix::from_rows(field, rows)};

        std::optional<LocalityStructure> locality;
        if (j.contains("locality")) {
            const json& loc = j.at("locality");
            LocalityStructure structure;
            structure.r = loc.at("r").get<size_t>();
            structure.delta = loc.at("delta").get<size_t>();
            structure.groups = loc.at("groups").get<std::vector<std::vector<size_t>>>();
            structure.validate(n);
            locality = std::move(structure);
        }
        return CodeDocument{std::move(code), std::move(locality)};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed code file: ") + e.what());
    }
}

CodeDocument read_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return code_from_json(buf.str());
}

void write_code_file(const std::string& path, const LinearCode& code,
                     const LocalityStructure* locality) {
    write_text_file(path, code_to_json(code, locality));
}

std::string report_to_json(const ConstructionReport& report) {
    json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["r"] = report.r;
    j["delta"] = report.delta;
    j["q"] = report.q;
    j["group_sizes"] = report.group_sizes;
    j["zero_columns"] = report.zero_columns;
    j["achieved_distance"] = report.achieved_distance;
    j["distance_bound"] = report.distance_bound;
    j["d_opt"] = report.d_opt;
    j["optimal"] = report.optimal;
    j["attempts"] = report.attempts;
    j["seed"] = report.seed;
    return j.dump(2) + "\n";
}

void write_report_file(const std::string& path, const ConstructionReport& report) {
    write_text_file(path, report_to_json(report));
}

std::string monte_carlo_csv(const std::vector<MonteCarloRow>& rows) {
    std::string out = "q,trials,successes,rate,mean_distance,bound,d_opt\n";
    char line[160];
    for (const MonteCarloRow& row : rows) {
        std::snprintf(line, sizeof(line), "%llu,%u,%u,%.6f,%.4f,%ld,%ld\n",
                      static_cast<unsigned long long>(row.q), row.trials, row.successes, row.rate,
                      row.mean_distance, row.bound, row.d_opt);
        out += line;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace lrc
