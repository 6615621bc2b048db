#include "finsphere/common/toml.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"

namespace finsphere::toml {
namespace {

std::string parse_basic_string(std::string_view s, int line_no) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
        throw ParseError("expected quoted string, got '" + std::string(s) + "'", line_no);
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c == '\\' && i + 2 < s.size()) {
            ++i;
            switch (s[i]) {
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                default:
                    throw ParseError("unsupported escape in string", line_no);
            }
        } else {
            out.push_back(c);
        }
    }
    return out;
}

Value parse_value(std::string_view raw, int line_no) {
    std::string s = text::trim(raw);
    if (s.empty()) throw ParseError("missing value", line_no);
    if (s.front() == '"') return parse_basic_string(s, line_no);
    if (s == "true") return true;
    if (s == "false") return false;
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated array", line_no);
        std::vector<std::string> items;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t i = 0;
        while (i < body.size()) {
            while (i < body.size() && (body[i] == ' ' || body[i] == '\t' || body[i] == ','))
                ++i;
            if (i >= body.size()) break;
            if (body[i] != '"')
                throw ParseError("only string arrays are supported", line_no);
            std::size_t j = i + 1;
            while (j < body.size() && body[j] != '"') {
                if (body[j] == '\\') ++j;
                ++j;
            }
            if (j >= body.size()) throw ParseError("unterminated string in array", line_no);
            items.push_back(parse_basic_string(body.substr(i, j - i + 1), line_no));
            i = j + 1;
        }
        return items;
    }
    // Bare scalar: try integer, then float.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
        long long iv = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), iv);
        if (ec == std::errc{} && p == s.data() + s.size()) return iv;
    }
    double dv = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), dv);
    if (ec == std::errc{} && p == s.data() + s.size()) return dv;
    throw ParseError("cannot parse value '" + s + "'", line_no);
}

std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
        if (c == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

}  // namespace

Document Document::parse(const std::string& body) {
    Document doc;
    std::istringstream in(body);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = text::trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("unterminated section header", line_no);
            section = text::trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw ParseError("empty section name", line_no);
            doc.sections_[section];
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value', got '" + line + "'", line_no);
        std::string key = text::trim(line.substr(0, eq));
        if (key.empty()) throw ParseError("empty key", line_no);
        doc.sections_[section][key] = parse_value(line.substr(eq + 1), line_no);
    }
    return doc;
}

Document Document::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool Document::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) > 0;
}

namespace {
template <typename T>
std::optional<T> get_as(const std::map<std::string, std::map<std::string, Value>>& sections,
                        const std::string& section, const std::string& key) {
    auto it = sections.find(section);
    if (it == sections.end()) return std::nullopt;
    auto kit = it->second.find(key);
    if (kit == it->second.end()) return std::nullopt;
    if (const T* v = std::get_if<T>(&kit->second)) return *v;
    return std::nullopt;
}
}  // namespace

std::optional<std::string> Document::get_string(const std::string& section,
                                                const std::string& key) const {
    return get_as<std::string>(sections_, section, key);
}

std::optional<long long> Document::get_int(const std::string& section,
                                           const std::string& key) const {
    return get_as<long long>(sections_, section, key);
}

std::optional<double> Document::get_double(const std::string& section,
                                           const std::string& key) const {
    if (auto d = get_as<double>(sections_, section, key)) return d;
    if (auto i = get_as<long long>(sections_, section, key))
        return static_cast<double>(*i);
    return std::nullopt;
}

std::optional<bool> Document::get_bool(const std::string& section,
                                       const std::string& key) const {
    return get_as<bool>(sections_, section, key);
}

std::optional<std::vector<std::string>> Document::get_string_array(
    const std::string& section, const std::string& key) const {
    return get_as<std::vector<std::string>>(sections_, section, key);
}

std::vector<std::string> Document::section_names() const {
    std::vector<std::string> names;
    names.reserve(sections_.size());
    for (const auto& [name, _] : sections_) names.push_back(name);
    return names;
}

}  // namespace finsphere::toml
