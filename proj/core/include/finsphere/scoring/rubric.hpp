#pragma once

#include <string>

namespace finsphere::scoring {

/// One report's scores on the 100-point rubric. Raw fields are constrained
/// to their enumerated point sets; the composite dimensions are derived:
/// content = content_dimensions + logical_consistency (max 45),
/// expression = structure + language (max 15),
/// total = conclusion + content + expression + data (max 100).
struct RubricScore {
    int conclusion = 0;          // {0, 5, 10, 20}
    int content_dimensions = 0;  // {0, 5, 10, 15, 18, 20, 25, 30}
    int logical_consistency = 0; // {0, 15}
    int structure = 0;           // {0, 5}
    int language = 0;            // {0, 5, 8, 10}
    int data = 0;                // {0, 5, 10, 15, 20}

    int content() const { return content_dimensions + logical_consistency; }
    int expression() const { return structure + language; }
    int total() const { return conclusion + content() + expression() + data; }

    /// Throws ValidationError when any field is outside its point set.
    void validate() const;

    friend bool operator==(const RubricScore&, const RubricScore&) = default;
};

/// Judged tiers for the rubric rows automation cannot decide. provenance
/// records who produced them.
struct JudgeInput {
    int conclusion_tier = 10;       // {0, 5, 10, 20}
    int content_dims_tier = 20;     // {0, 5, 10, 15, 18, 20, 25, 30}
    bool consistent = true;         // logical consistency 15 / 0
    int language_tier = 8;          // {0, 5, 8, 10}
    enum class Provenance { human, llm_judge, heuristic_default };
    Provenance provenance = Provenance::heuristic_default;

    /// Throws ValidationError when a tier is outside its set.
    void validate() const;
};

struct ScoreRow {
    std::string model_id;
    std::string query_id;
    RubricScore score;

    friend bool operator==(const ScoreRow&, const ScoreRow&) = default;
};

}  // namespace finsphere::scoring
