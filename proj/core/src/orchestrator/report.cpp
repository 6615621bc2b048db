#include "finsphere/orchestrator/report.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace finsphere::orchestrator {

namespace {

const std::array<analysis::ToolKind, 5> kAllKinds = {
    analysis::ToolKind::volume_price, analysis::ToolKind::technical,
    analysis::ToolKind::capital_flow, analysis::ToolKind::fundamental,
    analysis::ToolKind::news};

/// True when `line` is the step title `title`, tolerating a "Step N" prefix,
/// separating punctuation, and a trailing colon.
bool is_heading(const std::string& line, const std::string& title) {
    std::string t = text::to_lower(text::trim(line));
    const std::string want = text::to_lower(title);
    if (t.rfind("step", 0) == 0) {
        std::size_t i = 4;
        while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) ||
                                t[i] == ' ' || t[i] == '-' || t[i] == ':' || t[i] == '.'))
            ++i;
        t = t.substr(i);
    }
    if (!t.empty() && t.back() == ':') t.pop_back();
    return text::trim(t) == want;
}

}  // namespace

const std::vector<std::string>& report_step_titles() {
    static const std::vector<std::string> titles = {
        "Movement Summary", "Conclusions", "Detailed Analysis", "Final Summary"};
    return titles;
}

std::string render_full_text(const Report& parts) {
    std::string out;
    out += "Movement Summary:\n" + parts.movement_summary + "\n\n";
    out += "Conclusions:\n";
    out += "Short-term: " + parts.short_term_conclusion + "\n";
    out += "Medium to long-term: " + parts.medium_long_conclusion + "\n\n";
    out += "Detailed Analysis:\n";
    for (const auto& [kind, paragraph] : parts.detail_sections)
        out += "[" + analysis::display_name(kind) + "]\n" + paragraph + "\n\n";
    out += "Final Summary:\n" + parts.final_summary + "\n";
    return out;
}

std::string report_to_json(const Report& report, int indent) {
    nlohmann::ordered_json obj;
    obj["movement_summary"] = report.movement_summary;
    obj["short_term_conclusion"] = report.short_term_conclusion;
    obj["medium_long_conclusion"] = report.medium_long_conclusion;
    obj["detail_sections"] = nlohmann::ordered_json::array();
    for (const auto& [kind, paragraph] : report.detail_sections) {
        nlohmann::ordered_json section;
        section["kind"] = analysis::to_string(kind);
        section["paragraph"] = paragraph;
        obj["detail_sections"].push_back(std::move(section));
    }
    obj["final_summary"] = report.final_summary;
    obj["full_text"] = report.full_text;
    return obj.dump(indent);
}

Report report_from_json(const std::string& json_text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
    Report report;
    report.movement_summary = obj.value("movement_summary", std::string());
    report.short_term_conclusion = obj.value("short_term_conclusion", std::string());
    report.medium_long_conclusion = obj.value("medium_long_conclusion", std::string());
    if (obj.contains("detail_sections"))
        for (const auto& section : obj["detail_sections"])
            report.detail_sections.emplace_back(
                analysis::tool_kind_from(section.at("kind").get<std::string>()),
                section.at("paragraph").get<std::string>());
    report.final_summary = obj.value("final_summary", std::string());
    report.full_text = obj.value("full_text", std::string());
    return report;
}

Report parse_report_text(const std::string& generated) {
    Report report;
    report.full_text = generated;

    std::vector<std::string> lines;
    {
        std::istringstream in(generated);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }

    const auto& titles = report_step_titles();
    // Position of each step heading, in text order.
    std::vector<std::ptrdiff_t> starts(titles.size(), -1);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t t = 0; t < titles.size(); ++t)
            if (starts[t] < 0 && is_heading(lines[i], titles[t]))
                starts[t] = static_cast<std::ptrdiff_t>(i);

    auto segment = [&](std::size_t t) -> std::vector<std::string> {
        if (starts[t] < 0) return {};
        std::size_t begin = static_cast<std::size_t>(starts[t]) + 1;
        std::size_t end = lines.size();
        for (std::size_t other = 0; other < titles.size(); ++other)
            if (starts[other] > starts[t])
                end = std::min(end, static_cast<std::size_t>(starts[other]));
        return {lines.begin() + begin, lines.begin() + end};
    };
    auto joined = [](const std::vector<std::string>& seg) {
        std::string out;
        for (const auto& line : seg) {
            if (!out.empty()) out.push_back('\n');
            out += line;
        }
        return text::trim(out);
    };

    for (std::size_t t = 0; t < titles.size(); ++t)
        if (starts[t] < 0)
            report.parse_warnings.push_back("missing step heading '" + titles[t] + "'");

    report.movement_summary = joined(segment(0));

    for (const auto& line : segment(1)) {
        const std::string lower = text::to_lower(text::trim(line));
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        const std::string value = text::trim(line.substr(colon + 1));
        if (lower.rfind("short-term", 0) == 0 || lower.rfind("short term", 0) == 0)
            report.short_term_conclusion = value;
        else if (lower.rfind("medium", 0) == 0 || lower.rfind("long", 0) == 0)
            report.medium_long_conclusion = value;
    }
    if (starts[1] >= 0 && report.short_term_conclusion.empty())
        report.parse_warnings.push_back("no short-term conclusion line");
    if (starts[1] >= 0 && report.medium_long_conclusion.empty())
        report.parse_warnings.push_back("no medium to long-term conclusion line");

    // Detail segment: "[Section Name]" starts a section; other lines extend
    // the current paragraph.
    {
        std::optional<analysis::ToolKind> current;
        std::string paragraph;
        auto flush = [&]() {
            if (current && !text::trim(paragraph).empty())
                report.detail_sections.emplace_back(*current, text::trim(paragraph));
            paragraph.clear();
        };
        for (const auto& line : segment(2)) {
            const std::string t = text::trim(line);
            if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
                const std::string name = t.substr(1, t.size() - 2);
                std::optional<analysis::ToolKind> kind;
                for (auto k : kAllKinds)
                    if (analysis::display_name(k) == name) kind = k;
                flush();
                if (kind) {
                    current = kind;
                } else {
                    current.reset();
                    report.parse_warnings.push_back("unrecognized detail section '" +
                                                    name + "'");
                }
                continue;
            }
            if (!t.empty()) {
                if (!paragraph.empty()) paragraph.push_back(' ');
                paragraph += t;
            }
        }
        flush();
    }

    report.final_summary = joined(segment(3));
    return report;
}

}  // namespace finsphere::orchestrator
