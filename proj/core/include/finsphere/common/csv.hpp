#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace finsphere::csv {

/// One parsed row plus its 1-based line number in the source file.
struct Row {
    std::vector<std::string> fields;
    int line = 0;
};

/// RFC-4180-style field splitting: quoted fields may contain commas and
/// doubled quotes. Embedded newlines are not supported.
std::vector<std::string> split_line(std::string_view line, int line_no = 0);

/// Reads a headered CSV file. Verifies the header matches `expected_header`
/// exactly and returns the data rows; every row must have the header's arity.
/// Empty lines are skipped. Throws ParseError with line numbers.
std::vector<Row> read_file(const std::string& path,
                           const std::vector<std::string>& expected_header);

/// Reads a headered CSV without a fixed schema; returns header + rows.
std::pair<std::vector<std::string>, std::vector<Row>> read_file(const std::string& path);

std::string escape(std::string_view field);
std::string join(const std::vector<std::string>& fields);

double parse_double(const Row& row, std::size_t idx, std::string_view field_name);
long long parse_int(const Row& row, std::size_t idx, std::string_view field_name);

}  // namespace finsphere::csv
