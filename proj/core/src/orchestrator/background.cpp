#include "finsphere/orchestrator/background.hpp"

#include "finsphere/common/errors.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace finsphere::orchestrator {

BackgroundDoc assemble_background(const AnalysisPlan& plan,
                                  const std::vector<analysis::ToolReport>& reports,
                                  const std::string& question) {
    BackgroundDoc bg;
    bg.question = question;
    bg.as_of = plan.as_of;
    for (const auto& step : plan.steps) {
        const analysis::ToolReport* found = nullptr;
        for (const auto& report : reports)
            if (report.kind == step.kind) {
                found = &report;
                break;
            }
        if (!found)
            throw ValidationError("no tool report for plan step '" +
                                  analysis::to_string(step.kind) + "'");
        bg.sections.push_back(*found);
    }
    return bg;
}

std::string render_background(const BackgroundDoc& bg) {
    std::string out = "Question: " + bg.question + "\n\nBackground Information:\n";
    bool first = true;
    for (const auto& section : bg.sections) {
        if (!first) out += "\n";
        first = false;
        out += "[" + analysis::display_name(section.kind) + "]\n";
        out += section.narrative + "\n";
    }
    return out;
}

std::string background_to_json(const BackgroundDoc& bg, int indent) {
    nlohmann::ordered_json obj;
    obj["question"] = bg.question;
    obj["as_of"] = bg.as_of.to_string();
    obj["sections"] = nlohmann::ordered_json::array();
    for (const auto& section : bg.sections)
        obj["sections"].push_back(
            nlohmann::ordered_json::parse(analysis::tool_report_to_json(section)));
    return obj.dump(indent);
}

}  // namespace finsphere::orchestrator
