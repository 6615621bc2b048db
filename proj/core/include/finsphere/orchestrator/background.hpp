#pragma once

#include <string>
#include <vector>

#include "finsphere/analysis/findings.hpp"
#include "finsphere/orchestrator/plan.hpp"

namespace finsphere::orchestrator {

/// The ordered tool outputs feeding synthesis, with the original question
/// preserved verbatim.
struct BackgroundDoc {
    std::string question;
    std::vector<analysis::ToolReport> sections;  // ordered as the plan
    Instant as_of;
};

/// Orders `reports` by the plan's steps. Throws ValidationError naming the
/// kind when a step has no report.
BackgroundDoc assemble_background(const AnalysisPlan& plan,
                                  const std::vector<analysis::ToolReport>& reports,
                                  const std::string& question);

/// Plain-text rendering fed to prompts and few-shot samples: the question
/// followed by one bracket-titled block per section.
std::string render_background(const BackgroundDoc& bg);

/// JSON object {question, as_of, sections:[ToolReport...]}.
std::string background_to_json(const BackgroundDoc& bg, int indent = -1);

}  // namespace finsphere::orchestrator
