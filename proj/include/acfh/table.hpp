#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace acfh {

using Cell = std::variant<double, long long, bool, std::string>;

/// One result table per CLI command. CSV output carries the header row and
/// data rows; JSON wraps the same rows as objects together with the config
/// and library versions.
struct Table {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, '.' decimal separator: doubles round-trip exactly.
std::string format_double(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

} // namespace acfh
