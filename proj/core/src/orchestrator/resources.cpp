#include "finsphere/orchestrator/resources.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"
#include "finsphere/common/toml.hpp"

namespace finsphere::orchestrator {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kEmbeddedResources[];
extern const std::size_t kEmbeddedResourceCount;
}  // namespace detail

std::string_view embedded_resource(std::string_view name) {
    for (std::size_t i = 0; i < detail::kEmbeddedResourceCount; ++i)
        if (detail::kEmbeddedResources[i].first == name)
            return detail::kEmbeddedResources[i].second;
    throw NotFoundError("no embedded resource named '" + std::string(name) + "'");
}

std::vector<std::string> embedded_resource_names() {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < detail::kEmbeddedResourceCount; ++i)
        names.emplace_back(detail::kEmbeddedResources[i].first);
    return names;
}

namespace {

/// Embedded text, unless override_dir has a file of the same name.
std::string resource_text(const std::string& name, const std::string& override_dir) {
    if (!override_dir.empty()) {
        const auto path = std::filesystem::path(override_dir) / name;
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            if (!in) throw Error("cannot read resource override " + path.string());
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }
    }
    return std::string(embedded_resource(name));
}

/// Non-empty, non-comment lines, trimmed.
std::vector<std::string> parse_lines(const std::string& content) {
    std::vector<std::string> out;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = text::trim(line);
        if (!t.empty() && t[0] != '#') out.push_back(t);
    }
    return out;
}

FewShotExample parse_fewshot(const std::string& content, const std::string& name) {
    const auto bg_pos = content.find("[BACKGROUND]");
    const auto report_pos = content.find("[REPORT]");
    if (bg_pos == std::string::npos || report_pos == std::string::npos ||
        report_pos < bg_pos)
        throw ParseError("few-shot sample '" + name +
                         "' must contain [BACKGROUND] then [REPORT] markers");
    FewShotExample ex;
    const auto bg_start = bg_pos + std::string("[BACKGROUND]").size();
    ex.background = text::trim(content.substr(bg_start, report_pos - bg_start));
    ex.report = text::trim(content.substr(report_pos + std::string("[REPORT]").size()));
    return ex;
}

}  // namespace

ResourceSet::ResourceSet() { load(""); }

ResourceSet ResourceSet::with_overrides(const std::string& dir) {
    ResourceSet set;
    set.load(dir);
    return set;
}

void ResourceSet::load(const std::string& override_dir) {
    response_standards_ = resource_text("response_standards.txt", override_dir);
    writing_guidelines_ = resource_text("writing_guidelines.txt", override_dir);
    system_instruction_ = resource_text("system_instruction.txt", override_dir);
    forbidden_ = parse_lines(resource_text("forbidden_phrases.txt", override_dir));
    transitions_ = parse_lines(resource_text("transition_words.txt", override_dir));
    bullish_ = parse_lines(resource_text("keywords_bullish.txt", override_dir));
    bearish_ = parse_lines(resource_text("keywords_bearish.txt", override_dir));

    lexicon_.clear();
    const auto doc =
        toml::Document::parse(resource_text("dimension_lexicon.toml", override_dir));
    for (const auto& section : doc.section_names()) {
        auto keywords = doc.get_string_array(section, "keywords");
        if (!keywords)
            throw ParseError("dimension lexicon section '" + section +
                             "' lacks a keywords array");
        lexicon_.emplace_back(section, std::move(*keywords));
    }

    fewshots_.clear();
    for (const char* name : {"sample_report_bullish.txt", "sample_report_bearish.txt"})
        fewshots_.push_back(parse_fewshot(resource_text(name, override_dir), name));
}

}  // namespace finsphere::orchestrator
