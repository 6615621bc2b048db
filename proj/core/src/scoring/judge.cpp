#include "finsphere/scoring/judge.hpp"

#include <algorithm>

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"

namespace finsphere::scoring {

namespace {

bool any_phrase_in(const std::string& s, const std::vector<std::string>& phrases) {
    return std::any_of(phrases.begin(), phrases.end(), [&](const std::string& p) {
        return text::contains_phrase(s, p);
    });
}

}  // namespace

int count_data_dimensions(
    const std::string& report_text,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& lexicon) {
    const std::vector<std::string> sentences = text::split_sentences(report_text);
    int count = 0;
    for (const auto& [name, keywords] : lexicon) {
        bool hit = false;
        for (const std::string& sentence : sentences) {
            if (!text::contains_numeric_literal(sentence)) continue;
            if (any_phrase_in(sentence, keywords)) {
                hit = true;
                break;
            }
        }
        if (hit) ++count;
    }
    return count;
}

int data_score(int dimension_count) {
    if (dimension_count > 3) return 20;
    if (dimension_count == 3) return 15;
    if (dimension_count == 2) return 10;
    if (dimension_count == 1) return 5;
    return 0;
}

PhraseScan detect_forbidden_phrases(const std::string& report_text,
                                    const orchestrator::ResourceSet& resources) {
    PhraseScan scan;
    auto collect = [&](const std::vector<std::string>& phrases,
                       std::vector<PhraseViolation>& out) {
        for (const std::string& phrase : phrases)
            for (const text::PhraseHit& hit : text::find_phrase(report_text, phrase))
                out.push_back({hit.phrase, hit.position});
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return a.position != b.position ? a.position < b.position : a.phrase < b.phrase;
        });
    };
    collect(resources.forbidden_phrases(), scan.violations);
    collect(resources.transition_words(), scan.warnings);
    return scan;
}

StructureFlags check_structure(const orchestrator::Report& report) {
    StructureFlags flags;
    flags.movement_summary = !text::trim(report.movement_summary).empty();
    flags.dual_conclusions = !text::trim(report.short_term_conclusion).empty() &&
                             !text::trim(report.medium_long_conclusion).empty();
    flags.detail_sections = !report.detail_sections.empty();
    flags.final_summary = !text::trim(report.final_summary).empty();
    return flags;
}

RubricScore score_report(const orchestrator::Report& report, const JudgeInput& judge,
                         ScoringMode mode, const orchestrator::ResourceSet& resources) {
    RubricScore score;
    score.structure = check_structure(report).points();
    score.data =
        data_score(count_data_dimensions(report.full_text, resources.dimension_lexicon()));

    if (mode == ScoringMode::assisted) {
        if (judge.provenance == JudgeInput::Provenance::heuristic_default)
            throw ValidationError(
                "assisted scoring needs judged tiers with human or llm_judge provenance");
        judge.validate();
        score.conclusion = judge.conclusion_tier;
        score.content_dimensions = judge.content_dims_tier;
        score.logical_consistency = judge.consistent ? 15 : 0;
        score.language = judge.language_tier;
    } else {
        const bool has_short = !text::trim(report.short_term_conclusion).empty();
        const bool has_medium = !text::trim(report.medium_long_conclusion).empty();
        score.conclusion = has_short && has_medium ? 10 : (has_short || has_medium ? 5 : 0);

        const int dims =
            count_data_dimensions(report.full_text, resources.dimension_lexicon());
        score.content_dimensions =
            dims >= 5 ? 20 : dims == 4 ? 15 : dims == 3 ? 10 : dims == 2 ? 5 : 0;

        // A conclusion that argues both directions at once is the one
        // contradiction detectable without judgment.
        bool contradiction = false;
        for (const std::string* conclusion :
             {&report.short_term_conclusion, &report.medium_long_conclusion}) {
            if (any_phrase_in(*conclusion, resources.bullish_keywords()) &&
                any_phrase_in(*conclusion, resources.bearish_keywords()))
                contradiction = true;
        }
        score.logical_consistency = contradiction ? 0 : 15;
        score.language = 8;
    }

    score.validate();
    return score;
}

}  // namespace finsphere::scoring
