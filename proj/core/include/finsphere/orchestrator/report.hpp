#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finsphere/analysis/findings.hpp"

namespace finsphere::orchestrator {

/// A four-step analysis report. full_text is always the authoritative
/// rendering; the other fields are its structured parts.
struct Report {
    std::string movement_summary;  // at most 20 words
    std::string short_term_conclusion;
    std::string medium_long_conclusion;
    std::vector<std::pair<analysis::ToolKind, std::string>> detail_sections;
    std::string final_summary;
    std::string full_text;

    /// Non-empty when parse_report_text could not recover some structure
    /// from generated free text. Not part of the JSON serialization.
    std::vector<std::string> parse_warnings;
};

/// The four step titles, in order, as used by render/parse.
const std::vector<std::string>& report_step_titles();

/// Deterministic concatenation of the parts under the four step titles.
std::string render_full_text(const Report& parts);

/// JSON object with exactly the six report fields, in declaration order.
std::string report_to_json(const Report& report, int indent = -1);
Report report_from_json(const std::string& json_text);

/// Recovers a Report from generated text by scanning for the four step
/// titles. Unrecoverable parts stay empty and are listed in parse_warnings;
/// full_text always preserves the input verbatim.
Report parse_report_text(const std::string& generated);

}  // namespace finsphere::orchestrator
