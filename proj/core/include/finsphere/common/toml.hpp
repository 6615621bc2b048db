#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace finsphere::toml {

using Value = std::variant<std::string, long long, double, bool, std::vector<std::string>>;

/// Minimal TOML subset: `[section]` headers, `key = value` pairs with basic
/// strings, integers, floats, booleans, and arrays of strings. `#` comments.
/// Covers the run-config and lexicon files; nothing more.
class Document {
public:
    static Document parse(const std::string& text);
    static Document parse_file(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    std::optional<std::string> get_string(const std::string& section,
                                          const std::string& key) const;
    std::optional<long long> get_int(const std::string& section, const std::string& key) const;
    std::optional<double> get_double(const std::string& section, const std::string& key) const;
    std::optional<bool> get_bool(const std::string& section, const std::string& key) const;
    std::optional<std::vector<std::string>> get_string_array(const std::string& section,
                                                             const std::string& key) const;

    std::vector<std::string> section_names() const;
    const std::map<std::string, std::map<std::string, Value>>& sections() const {
        return sections_;
    }

private:
    std::map<std::string, std::map<std::string, Value>> sections_;
};

}  // namespace finsphere::toml
