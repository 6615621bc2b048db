#include "finsphere/common/csv.hpp"

#include <charconv>
#include <fstream>

#include "finsphere/common/errors.hpp"

namespace finsphere::csv {

std::vector<std::string> split_line(std::string_view line, int line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            if (!current.empty())
                throw ParseError("unexpected quote inside unquoted field", line_no);
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
        ++i;
    }
    if (in_quotes) throw ParseError("unterminated quoted field", line_no);
    fields.push_back(std::move(current));
    return fields;
}

namespace {

std::pair<std::vector<std::string>, std::vector<Row>> read_impl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::string line;
    int line_no = 0;
    std::vector<std::string> header;
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_line(line, line_no);
        if (header.empty()) {
            header = std::move(fields);
        } else {
            if (fields.size() != header.size())
                throw ParseError("expected " + std::to_string(header.size()) +
                                     " fields, found " + std::to_string(fields.size()),
                                 line_no);
            rows.push_back({std::move(fields), line_no});
        }
    }
    if (header.empty()) throw ParseError("file '" + path + "' has no header row");
    return {std::move(header), std::move(rows)};
}

}  // namespace

std::vector<Row> read_file(const std::string& path,
                           const std::vector<std::string>& expected_header) {
    auto [header, rows] = read_impl(path);
    if (header != expected_header) {
        std::string want = join(expected_header);
        std::string got = join(header);
        throw ParseError("unexpected header in '" + path + "': got '" + got +
                         "', expected '" + want + "'");
    }
    return rows;
}

std::pair<std::vector<std::string>, std::vector<Row>> read_file(const std::string& path) {
    return read_impl(path);
}

std::string escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    return out;
}

double parse_double(const Row& row, std::size_t idx, std::string_view field_name) {
    const std::string& s = row.fields.at(idx);
    double v = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || p != end)
        throw ParseError("field '" + std::string(field_name) + "': invalid number '" + s +
                             "'",
                         row.line);
    return v;
}

long long parse_int(const Row& row, std::size_t idx, std::string_view field_name) {
    const std::string& s = row.fields.at(idx);
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("field '" + std::string(field_name) + "': invalid integer '" + s +
                             "'",
                         row.line);
    return v;
}

}  // namespace finsphere::csv
