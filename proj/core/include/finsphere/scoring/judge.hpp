#pragma once

#include <string>
#include <vector>

#include "finsphere/orchestrator/report.hpp"
#include "finsphere/orchestrator/resources.hpp"
#include "finsphere/scoring/rubric.hpp"

namespace finsphere::scoring {

/// How many analysis dimensions the text actually uses: a dimension counts
/// when one of its lexicon keywords shares a sentence with a numeric figure.
int count_data_dimensions(
    const std::string& report_text,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& lexicon);

/// Dimension count -> data points: >3 -> 20, 3 -> 15, 2 -> 10, 1 -> 5, 0 -> 0.
int data_score(int dimension_count);

struct PhraseViolation {
    std::string phrase;
    std::size_t position = 0;

    friend bool operator==(const PhraseViolation&, const PhraseViolation&) = default;
};

struct PhraseScan {
    std::vector<PhraseViolation> violations;  // blocklisted phrases
    std::vector<PhraseViolation> warnings;    // transition words (advisory)
};

/// Case-insensitive whole-phrase scan against the bundled blocklist and
/// transition-word list.
PhraseScan detect_forbidden_phrases(const std::string& report_text,
                                    const orchestrator::ResourceSet& resources = {});

struct StructureFlags {
    bool movement_summary = false;
    bool dual_conclusions = false;
    bool detail_sections = false;
    bool final_summary = false;

    bool all() const {
        return movement_summary && dual_conclusions && detail_sections && final_summary;
    }
    int points() const { return all() ? 5 : 0; }
};

StructureFlags check_structure(const orchestrator::Report& report);

enum class ScoringMode { assisted, heuristic };

/// Combines automated checks (structure, data) with judged tiers. Assisted
/// mode takes conclusion/content/consistency/language from `judge` (which
/// must carry human or llm_judge provenance); heuristic mode derives
/// defaults from the report alone.
RubricScore score_report(const orchestrator::Report& report, const JudgeInput& judge,
                         ScoringMode mode,
                         const orchestrator::ResourceSet& resources = {});

}  // namespace finsphere::scoring
