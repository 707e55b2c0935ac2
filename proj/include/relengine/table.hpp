#pragma once

#include <string>
#include <variant>
#include <vector>

namespace relengine {

/// One output cell: a number, a label, or blank (CSV empty field, JSON null).
using Cell = std::variant<std::monostate, double, std::string>;

/// Column-named rows shared by every command; one data model, two
/// serializations.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::vector<Cell>& add_row();
};

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

/// CSV with a single `# relengine v...` comment line followed by the header.
std::string to_csv(const Table& table);

/// JSON object {"tool", "version", "rows": [...]} mirroring the CSV rows as
/// flat objects with identical field names; blanks become null.
std::string to_json(const Table& table);

}  // namespace relengine
