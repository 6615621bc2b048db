#include "finsphere/orchestrator/prompt.hpp"

namespace finsphere::orchestrator {

namespace {

std::string joined_list(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += ", ";
        out += "\"" + item + "\"";
    }
    return out;
}

}  // namespace

std::string PromptDocument::render() const {
    std::string out;
    for (const auto& block : blocks) {
        out += "## " + block.title + "\n\n";
        out += block.body;
        if (!out.empty() && out.back() != '\n') out.push_back('\n');
        out.push_back('\n');
    }
    return out;
}

PromptDocument build_prompt(const BackgroundDoc& bg,
                            const std::vector<FewShotExample>& fewshots,
                            const ResourceSet& resources) {
    PromptDocument doc;
    doc.system_instruction = resources.system_instruction();

    doc.blocks.push_back({"Background Information", render_background(bg)});
    doc.blocks.push_back({"Response Standards", resources.response_standards()});

    std::string guidelines = resources.writing_guidelines();
    guidelines += "\nBullish vocabulary: " + joined_list(resources.bullish_keywords()) + ".\n";
    guidelines += "Bearish vocabulary: " + joined_list(resources.bearish_keywords()) + ".\n";
    guidelines +=
        "Blocked phrases: " + joined_list(resources.forbidden_phrases()) + ".\n";
    guidelines += "Transition words to minimize: " +
                  joined_list(resources.transition_words()) + ".\n";
    doc.blocks.push_back({"Writing Guidelines", std::move(guidelines)});

    if (!fewshots.empty()) {
        std::string body;
        int index = 1;
        for (const auto& example : fewshots) {
            body += "### Example " + std::to_string(index++) + "\n\n";
            body += example.background;
            if (!body.empty() && body.back() != '\n') body.push_back('\n');
            body += "\nExpected report:\n\n" + example.report;
            if (!body.empty() && body.back() != '\n') body.push_back('\n');
            body.push_back('\n');
        }
        doc.blocks.push_back({"Examples", std::move(body)});
    }

    doc.blocks.push_back({"Query", bg.question + "\n"});
    return doc;
}

}  // namespace finsphere::orchestrator
