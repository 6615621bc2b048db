#pragma once

#include <string>
#include <vector>

#include "finsphere/scoring/rubric.hpp"

namespace finsphere::scoring {

/// Header of the score interchange file. Derived columns (content,
/// expression, total) are computed on load, never stored.
const std::vector<std::string>& score_csv_header();

/// Reads score rows from a CSV file, validating every rubric field against
/// its point set. Throws ParseError (with line numbers) or ValidationError.
std::vector<ScoreRow> read_scores_csv(const std::string& path);

/// Writes score rows in score_csv_header() order.
void write_scores_csv(const std::string& path, const std::vector<ScoreRow>& rows);

}  // namespace finsphere::scoring
