#include "acfh/table.hpp"

#include <cstdio>

#include "acfh/version.hpp"
#include "json.hpp"

namespace acfh {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
    if (std::holds_alternative<bool>(c)) return std::get<bool>(c) ? "true" : "false";
    return csv_escape(std::get<std::string>(c));
}

} // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["command"] = t.command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.config) cfg[k] = v;
    j["config"] = cfg;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            const Cell& c = row[i];
            if (std::holds_alternative<double>(c))
                obj[t.columns[i]] = std::get<double>(c);
            else if (std::holds_alternative<long long>(c))
                obj[t.columns[i]] = std::get<long long>(c);
            else if (std::holds_alternative<bool>(c))
                obj[t.columns[i]] = std::get<bool>(c);
            else
                obj[t.columns[i]] = std::get<std::string>(c);
        }
        j["rows"].push_back(obj);
    }
    j["versions"] = {{"acfh", std::string(kVersion)}};
    return j.dump(2) + "\n";
}

} // namespace acfh
