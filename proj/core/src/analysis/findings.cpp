#include "finsphere/analysis/findings.hpp"

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace finsphere::analysis {

using ordered_json = nlohmann::ordered_json;

ToolKind tool_kind_from(const std::string& name) {
    if (name == "volume_price") return ToolKind::volume_price;
    if (name == "technical") return ToolKind::technical;
    if (name == "capital_flow") return ToolKind::capital_flow;
    if (name == "fundamental") return ToolKind::fundamental;
    if (name == "news") return ToolKind::news;
    throw ValidationError("unknown tool kind '" + name + "'");
}

std::string to_string(ToolKind kind) {
    switch (kind) {
        case ToolKind::volume_price: return "volume_price";
        case ToolKind::technical: return "technical";
        case ToolKind::capital_flow: return "capital_flow";
        case ToolKind::fundamental: return "fundamental";
        case ToolKind::news: return "news";
    }
    return "?";
}

std::string display_name(ToolKind kind) {
    switch (kind) {
        case ToolKind::volume_price: return "Volume and Price Analysis";
        case ToolKind::technical: return "Technical Analysis";
        case ToolKind::capital_flow: return "Capital Flow Analysis";
        case ToolKind::fundamental: return "Fundamental Analysis";
        case ToolKind::news: return "News Analysis";
    }
    return "?";
}

Signal signal_from(const std::string& name) {
    if (name == "bullish") return Signal::bullish;
    if (name == "bearish") return Signal::bearish;
    if (name == "neutral") return Signal::neutral;
    throw ValidationError("unknown signal '" + name + "'");
}

std::string to_string(Signal signal) {
    switch (signal) {
        case Signal::bullish: return "bullish";
        case Signal::bearish: return "bearish";
        case Signal::neutral: return "neutral";
    }
    return "?";
}

Finding Finding::number(std::string label, double value, std::string unit) {
    Finding f;
    f.label = std::move(label);
    f.value = value;
    f.unit = std::move(unit);
    return f;
}

Finding Finding::text(std::string label, std::string value, std::string unit) {
    Finding f;
    f.label = std::move(label);
    f.value = std::move(value);
    f.unit = std::move(unit);
    return f;
}

std::string Finding::value_text() const {
    if (is_numeric()) return text::format_number(numeric());
    return text_value();
}

const Finding* find_finding(const std::vector<Finding>& findings, std::string_view label) {
    for (const auto& f : findings)
        if (f.label == label) return &f;
    return nullptr;
}

std::string tool_report_to_json(const ToolReport& report, int indent) {
    ordered_json obj;
    obj["kind"] = to_string(report.kind);
    obj["findings"] = ordered_json::array();
    for (const auto& f : report.findings) {
        ordered_json fo;
        fo["label"] = f.label;
        if (f.is_numeric())
            fo["value"] = f.numeric();
        else
            fo["value"] = f.text_value();
        fo["unit"] = f.unit;
        obj["findings"].push_back(std::move(fo));
    }
    obj["narrative"] = report.narrative;
    obj["signal"] = to_string(report.signal);
    obj["data_citations"] = report.data_citations;
    return obj.dump(indent);
}

ToolReport tool_report_from_json(const std::string& json_text) {
    ordered_json obj;
    try {
        obj = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid tool report JSON: ") + e.what());
    }
    ToolReport report;
    report.kind = tool_kind_from(obj.at("kind").get<std::string>());
    for (const auto& fo : obj.at("findings")) {
        Finding f;
        f.label = fo.at("label").get<std::string>();
        if (fo.at("value").is_number())
            f.value = fo.at("value").get<double>();
        else
            f.value = fo.at("value").get<std::string>();
        f.unit = fo.value("unit", std::string());
        report.findings.push_back(std::move(f));
    }
    report.narrative = obj.value("narrative", std::string());
    report.signal = signal_from(obj.at("signal").get<std::string>());
    report.data_citations = obj.value("data_citations", 0);
    return report;
}

}  // namespace finsphere::analysis
