#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "finsphere/scoring/rubric.hpp"

namespace finsphere::scoring {

enum class Dimension { conclusion, content, expression, data, total };

inline constexpr std::array<Dimension, 5> kAllDimensions = {
    Dimension::conclusion, Dimension::content, Dimension::expression, Dimension::data,
    Dimension::total};

std::string dimension_name(Dimension d);
double dimension_value(const RubricScore& score, Dimension d);

/// One group's ranking of a model set for one query and dimension. Ties
/// share a rank.
struct RankVector {
    std::string group_id;
    std::string query_id;
    Dimension dimension = Dimension::total;
    std::map<std::string, double> ranks;  // model id -> rank
};

/// Kendall's tau-b over paired ranks: (C - D) / sqrt((C+D+Ta)(C+D+Tb)),
/// where Ta/Tb count pairs tied on exactly one side. Throws
/// UndefinedCorrelationError when either side is fully tied, ValidationError
/// on length mismatch or fewer than two items.
double kendall_tau(const std::vector<double>& a, const std::vector<double>& b);

/// Same, aligning by model id; the two vectors must rank the same model set.
double kendall_tau(const RankVector& a, const RankVector& b);

/// Competition ranking of models by descending score (best = 1, ties share
/// the smaller rank).
std::map<std::string, double> rank_by_score(
    const std::map<std::string, double>& scores_by_model);

struct ModelSummary {
    std::string model_id;
    double conclusion = 0;
    double content = 0;
    double expression = 0;
    double data = 0;
    double total = 0;
    std::size_t row_count = 0;
};

/// Per-model arithmetic means over every scored dimension, sorted by mean
/// total descending (model id breaks ties). Throws ValidationError on empty
/// input.
std::vector<ModelSummary> aggregate_scores(const std::vector<ScoreRow>& rows);

struct GroupScores {
    std::string group_id;
    std::vector<ScoreRow> rows;
};

struct PairAgreement {
    std::string group_a;
    std::string group_b;
    std::array<double, 5> tau{};              // mean tau per dimension, kAllDimensions order
    std::array<std::size_t, 5> query_count{}; // queries contributing per dimension
};

struct AgreementResult {
    std::vector<PairAgreement> pairs;  // group pairs in input order
    std::array<double, 5> average{};   // mean over pairs per dimension
    std::size_t missing_query_warnings = 0;  // (pair, query) exclusions
    std::size_t undefined_tau_warnings = 0;  // all-tied rankings skipped
};

/// For every group pair and query, ranks the shared models by each dimension
/// and averages the pairwise taus over queries. Queries absent from either
/// group (or without at least two shared models) are excluded and counted.
AgreementResult group_agreement(const std::vector<GroupScores>& groups);

}  // namespace finsphere::scoring
