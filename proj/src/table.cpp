#include "relengine/table.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "relengine/version.hpp"

namespace relengine {

std::vector<Cell>& Table::add_row() {
    rows.emplace_back(columns.size());
    return rows.back();
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
    std::string out;
    out += "# ";
    out += kToolName;
    out += " v";
    out += kVersion;
    out += '\n';
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::logic_error("to_csv: row width mismatch");
        }
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (const double* d = std::get_if<double>(&row[i])) {
                out += format_double(*d);
            } else if (const std::string* s = std::get_if<std::string>(&row[i])) {
                out += *s;
            }
            // monostate: leave the field empty
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::ordered_json doc;
    doc["tool"] = std::string(kToolName);
    doc["version"] = std::string(kVersion);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::logic_error("to_json: row width mismatch");
        }
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < row.size(); ++i) {
            if (const double* d = std::get_if<double>(&row[i])) {
                obj[table.columns[i]] = *d;
            } else if (const std::string* s = std::get_if<std::string>(&row[i])) {
                obj[table.columns[i]] = *s;
            } else {
                obj[table.columns[i]] = nullptr;
            }
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

}  // namespace relengine
