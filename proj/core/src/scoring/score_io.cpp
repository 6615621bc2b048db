#include "finsphere/scoring/score_io.hpp"

#include <fstream>
#include <set>

#include "finsphere/common/csv.hpp"
#include "finsphere/common/errors.hpp"

namespace finsphere::scoring {

const std::vector<std::string>& score_csv_header() {
    static const std::vector<std::string> header = {
        "model_id",  "query_id", "conclusion", "content_dimensions",
        "logical_consistency", "structure", "language", "data"};
    return header;
}

std::vector<ScoreRow> read_scores_csv(const std::string& path) {
    std::vector<ScoreRow> rows;
    std::set<std::pair<std::string, std::string>> seen;
    for (const csv::Row& row : csv::read_file(path, score_csv_header())) {
        ScoreRow out;
        out.model_id = row.fields[0];
        out.query_id = row.fields[1];
        if (out.model_id.empty() || out.query_id.empty())
            throw ParseError("empty model_id or query_id", row.line);
        if (!seen.insert({out.model_id, out.query_id}).second)
            throw ParseError("duplicate (model_id, query_id): " + out.model_id + ", " +
                                 out.query_id,
                             row.line);
        out.score.conclusion = static_cast<int>(csv::parse_int(row, 2, "conclusion"));
        out.score.content_dimensions =
            static_cast<int>(csv::parse_int(row, 3, "content_dimensions"));
        out.score.logical_consistency =
            static_cast<int>(csv::parse_int(row, 4, "logical_consistency"));
        out.score.structure = static_cast<int>(csv::parse_int(row, 5, "structure"));
        out.score.language = static_cast<int>(csv::parse_int(row, 6, "language"));
        out.score.data = static_cast<int>(csv::parse_int(row, 7, "data"));
        try {
            out.score.validate();
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), row.line);
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

void write_scores_csv(const std::string& path, const std::vector<ScoreRow>& rows) {
    std::ofstream out(path);
    if (!out) throw NotFoundError("cannot open for writing: " + path);
    out << csv::join(score_csv_header()) << "\n";
    for (const ScoreRow& row : rows) {
        row.score.validate();
        out << csv::join({row.model_id, row.query_id,
                          std::to_string(row.score.conclusion),
                          std::to_string(row.score.content_dimensions),
                          std::to_string(row.score.logical_consistency),
                          std::to_string(row.score.structure),
                          std::to_string(row.score.language),
                          std::to_string(row.score.data)})
            << "\n";
    }
}

}  // namespace finsphere::scoring
