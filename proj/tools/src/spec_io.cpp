#include "spec_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace koszulkit::cli {

namespace {

int as_int(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ConfigError(field + ": expected an integer");
    return j.get<int>();
}

FiniteGroup group_from_table(std::vector<std::vector<int>> table) {
    try {
        return FiniteGroup(std::move(table));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("gamma: ") + e.what());
    }
}

FiniteGroup cyclic(int n) {
    if (n < 1) throw ConfigError("gamma: cyclic order must be positive");
    return FiniteGroup::cyclic(n);
}

}  // namespace

LoadedSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("category spec must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "family" && key != "gamma" && key != "d" && key != "q" && key != "interval")
            throw ConfigError("unknown field '" + key + "' in category spec");
    LoadedSpec out;
    if (!j.contains("family") || !j["family"].is_string()) throw ConfigError("family: missing or not a string");
    out.spec.family = j["family"].get<std::string>();
    if (j.contains("gamma")) {
        const auto& g = j["gamma"];
        if (g.is_object() && g.size() == 1 && g.contains("cyclic")) {
            out.spec.gamma = cyclic(as_int(g["cyclic"], "gamma.cyclic"));
        } else if (g.is_object() && g.size() == 1 && g.contains("table")) {
            std::vector<std::vector<int>> table;
            if (!g["table"].is_array()) throw ConfigError("gamma.table: expected an array of rows");
            for (const auto& row : g["table"]) {
                if (!row.is_array()) throw ConfigError("gamma.table: expected an array of rows");
                auto& r = table.emplace_back();
                for (const auto& v : row) r.push_back(as_int(v, "gamma.table"));
            }
            out.spec.gamma = group_from_table(std::move(table));
        } else {
            throw ConfigError("gamma: expected {\"cyclic\": n} or {\"table\": [[...]]}");
        }
    }
    if (j.contains("d")) out.spec.d = as_int(j["d"], "d");
    if (j.contains("q")) out.spec.q = as_int(j["q"], "q");
    if (j.contains("interval")) {
        const auto& iv = j["interval"];
        if (!iv.is_array() || iv.size() != 2) throw ConfigError("interval: expected [lo, hi]");
        out.interval = Interval{as_int(iv[0], "interval"), as_int(iv[1], "interval")};
    }
    return out;
}

LoadedSpec spec_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return spec_from_json(j);
}

FiniteGroup parse_gamma(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("--gamma: expected cyclic:n or table:rows");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    try {
        if (kind == "cyclic") {
            std::size_t used = 0;
            const int n = std::stoi(body, &used);
            if (used != body.size()) throw ConfigError("--gamma: bad cyclic order '" + body + "'");
            return cyclic(n);
        }
        if (kind == "table") {
            std::vector<std::vector<int>> table;
            std::stringstream rows(body);
            std::string row;
            while (std::getline(rows, row, ';')) {
                auto& r = table.emplace_back();
                std::stringstream cells(row);
                std::string cell;
                while (std::getline(cells, cell, ',')) r.push_back(std::stoi(cell));
            }
            return group_from_table(std::move(table));
        }
    } catch (const std::logic_error&) {
        throw ConfigError("--gamma: cannot parse '" + text + "'");
    }
    throw ConfigError("--gamma: unknown kind '" + kind + "'");
}

nlohmann::ordered_json spec_to_json(const CategorySpec& spec, Interval iv) {
    nlohmann::ordered_json j;
    j["family"] = spec.family;
    if (spec.gamma) j["gamma"] = {{"table", spec.gamma->table()}};
    if (spec.d) j["d"] = *spec.d;
    if (spec.q) j["q"] = *spec.q;
    j["interval"] = {iv.lo, iv.hi};
    return j;
}

std::size_t max_dim_from_env() {
    const char* v = std::getenv("KOSZULKIT_MAX_DIM");
    if (!v || !*v) return 5000;
    char* end = nullptr;
    const long long n = std::strtoll(v, &end, 10);
    if (*end != '\0' || n <= 0) throw ConfigError("KOSZULKIT_MAX_DIM must be a positive integer");
    return static_cast<std::size_t>(n);
}

}  // namespace koszulkit::cli
