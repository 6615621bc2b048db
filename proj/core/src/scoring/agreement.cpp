#include "finsphere/scoring/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "finsphere/common/errors.hpp"

namespace finsphere::scoring {

std::string dimension_name(Dimension d) {
    switch (d) {
        case Dimension::conclusion: return "conclusion";
        case Dimension::content: return "content";
        case Dimension::expression: return "expression";
        case Dimension::data: return "data";
        case Dimension::total: return "total";
    }
    throw ValidationError("unknown score dimension");
}

double dimension_value(const RubricScore& score, Dimension d) {
    switch (d) {
        case Dimension::conclusion: return score.conclusion;
        case Dimension::content: return score.content();
        case Dimension::expression: return score.expression();
        case Dimension::data: return score.data;
        case Dimension::total: return score.total();
    }
    throw ValidationError("unknown score dimension");
}

double kendall_tau(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw ValidationError("rank vectors differ in length");
    if (a.size() < 2)
        throw ValidationError("rank correlation needs at least two items");

    long long concordant = 0, discordant = 0, tied_a_only = 0, tied_b_only = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const double da = a[i] - a[j];
            const double db = b[i] - b[j];
            if (da == 0 && db == 0) continue;  // tied on both sides: drops out entirely
            if (da == 0) ++tied_a_only;
            else if (db == 0) ++tied_b_only;
            else if ((da < 0) == (db < 0)) ++concordant;
            else ++discordant;
        }
    }
    // Pairs untied in a: C + D + tied_b_only; untied in b: C + D + tied_a_only.
    const double untied_a = static_cast<double>(concordant + discordant + tied_b_only);
    const double untied_b = static_cast<double>(concordant + discordant + tied_a_only);
    if (untied_a == 0 || untied_b == 0)
        throw UndefinedCorrelationError("rank vector is fully tied; tau is undefined");
    return static_cast<double>(concordant - discordant) / std::sqrt(untied_a * untied_b);
}

double kendall_tau(const RankVector& a, const RankVector& b) {
    if (a.ranks.size() != b.ranks.size())
        throw ValidationError("rank vectors cover different model sets");
    std::vector<double> ra, rb;
    ra.reserve(a.ranks.size());
    rb.reserve(b.ranks.size());
    for (const auto& [model, rank] : a.ranks) {
        auto it = b.ranks.find(model);
        if (it == b.ranks.end())
            throw ValidationError("rank vectors cover different model sets: missing " +
                                  model);
        ra.push_back(rank);
        rb.push_back(it->second);
    }
    return kendall_tau(ra, rb);
}

std::map<std::string, double> rank_by_score(
    const std::map<std::string, double>& scores_by_model) {
    std::vector<std::pair<std::string, double>> order(scores_by_model.begin(),
                                                      scores_by_model.end());
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        return x.second != y.second ? x.second > y.second : x.first < y.first;
    });
    std::map<std::string, double> ranks;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && order[i].second == order[i - 1].second)
            ranks[order[i].first] = ranks[order[i - 1].first];
        else
            ranks[order[i].first] = static_cast<double>(i + 1);
    }
    return ranks;
}

std::vector<ModelSummary> aggregate_scores(const std::vector<ScoreRow>& rows) {
    if (rows.empty()) throw ValidationError("no score rows to aggregate");

    std::map<std::string, ModelSummary> by_model;
    for (const ScoreRow& row : rows) {
        ModelSummary& s = by_model[row.model_id];
        s.model_id = row.model_id;
        s.conclusion += row.score.conclusion;
        s.content += row.score.content();
        s.expression += row.score.expression();
        s.data += row.score.data;
        s.total += row.score.total();
        ++s.row_count;
    }

    std::vector<ModelSummary> out;
    out.reserve(by_model.size());
    for (auto& [_, s] : by_model) {
        const double n = static_cast<double>(s.row_count);
        s.conclusion /= n;
        s.content /= n;
        s.expression /= n;
        s.data /= n;
        s.total /= n;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const ModelSummary& x, const ModelSummary& y) {
        return x.total != y.total ? x.total > y.total : x.model_id < y.model_id;
    });
    return out;
}

namespace {

using QueryScores = std::map<std::string, std::map<std::string, RubricScore>>;

QueryScores index_group(const GroupScores& group) {
    QueryScores idx;
    for (const ScoreRow& row : group.rows) idx[row.query_id][row.model_id] = row.score;
    return idx;
}

}  // namespace

AgreementResult group_agreement(const std::vector<GroupScores>& groups) {
    if (groups.size() < 2)
        throw ValidationError("agreement needs at least two score groups");

    std::vector<QueryScores> indexed;
    indexed.reserve(groups.size());
    std::set<std::string> all_queries;
    for (const GroupScores& g : groups) {
        indexed.push_back(index_group(g));
        for (const auto& [query, _] : indexed.back()) all_queries.insert(query);
    }

    AgreementResult result;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            PairAgreement pair;
            pair.group_a = groups[i].group_id;
            pair.group_b = groups[j].group_id;
            std::array<double, 5> tau_sum{};

            for (const std::string& query : all_queries) {
                auto qa = indexed[i].find(query);
                auto qb = indexed[j].find(query);
                if (qa == indexed[i].end() || qb == indexed[j].end()) {
                    ++result.missing_query_warnings;
                    continue;
                }
                std::vector<std::string> shared;
                for (const auto& [model, _] : qa->second)
                    if (qb->second.count(model)) shared.push_back(model);
                if (shared.size() < 2) {
                    ++result.missing_query_warnings;
                    continue;
                }

                for (std::size_t d = 0; d < kAllDimensions.size(); ++d) {
                    std::map<std::string, double> sa, sb;
                    for (const std::string& model : shared) {
                        sa[model] = dimension_value(qa->second.at(model), kAllDimensions[d]);
                        sb[model] = dimension_value(qb->second.at(model), kAllDimensions[d]);
                    }
                    RankVector va{pair.group_a, query, kAllDimensions[d], rank_by_score(sa)};
                    RankVector vb{pair.group_b, query, kAllDimensions[d], rank_by_score(sb)};
                    try {
                        tau_sum[d] += kendall_tau(va, vb);
                        ++pair.query_count[d];
                    } catch (const UndefinedCorrelationError&) {
                        ++result.undefined_tau_warnings;
                    }
                }
            }

            for (std::size_t d = 0; d < kAllDimensions.size(); ++d) {
                if (pair.query_count[d] == 0)
                    throw ValidationError("groups " + pair.group_a + " and " +
                                          pair.group_b + " share no comparable " +
                                          dimension_name(kAllDimensions[d]) + " rankings");
                pair.tau[d] = tau_sum[d] / static_cast<double>(pair.query_count[d]);
            }
            result.pairs.push_back(std::move(pair));
        }
    }

    for (std::size_t d = 0; d < kAllDimensions.size(); ++d) {
        double sum = 0;
        for (const PairAgreement& pair : result.pairs) sum += pair.tau[d];
        result.average[d] = sum / static_cast<double>(result.pairs.size());
    }
    return result;
}

}  // namespace finsphere::scoring
