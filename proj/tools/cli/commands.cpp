#include "cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include "finsphere/common/csv.hpp"
#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"
#include "finsphere/market/store.hpp"
#include "finsphere/orchestrator/engine.hpp"
#include "finsphere/scoring/agreement.hpp"
#include "finsphere/scoring/judge.hpp"
#include "finsphere/scoring/score_io.hpp"

namespace fs = std::filesystem;

namespace finsphere::cli {

namespace {

std::shared_ptr<const market::MarketStore> load_store(const config::RunConfig& cfg) {
    auto store = std::make_shared<market::MarketStore>();
    store->load_directory(cfg.store_dir);
    return store;
}

std::optional<Instant> parse_as_of(const std::string& as_of) {
    if (as_of.empty()) return std::nullopt;
    return Instant::parse(as_of);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw NotFoundError("cannot open for writing: " + path.string());
    out << content;
    if (!content.empty() && content.back() != '\n') out << "\n";
}

struct QueryEntry {
    std::string id;
    std::string query;
    std::string as_of;
};

/// Plain lines, or CSV when the header line is exactly `query_id,query,as_of`.
std::vector<QueryEntry> read_queries(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("cannot read queries file: " + path);
    std::string first;
    if (!std::getline(in, first)) return {};

    std::vector<QueryEntry> entries;
    if (text::trim(first) == "query_id,query,as_of") {
        for (const csv::Row& row :
             csv::read_file(path, {"query_id", "query", "as_of"}))
            entries.push_back({row.fields[0], row.fields[1], row.fields[2]});
        return entries;
    }
    in.clear();
    in.seekg(0);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        const std::string query = text::trim(line);
        if (query.empty()) continue;
        ++n;
        std::ostringstream id;
        id << "q" << std::setw(3) << std::setfill('0') << n;
        entries.push_back({id.str(), query, ""});
    }
    return entries;
}

void print_summary(std::ostream& out, const std::vector<scoring::ModelSummary>& summary) {
    out << std::left << std::setw(16) << "model" << std::right << std::setw(12)
        << "conclusion" << std::setw(10) << "content" << std::setw(12) << "expression"
        << std::setw(8) << "data" << std::setw(9) << "total" << "\n";
    for (const auto& row : summary) {
        out << std::left << std::setw(16) << row.model_id << std::right << std::setw(12)
            << text::format_fixed2(row.conclusion) << std::setw(10)
            << text::format_fixed2(row.content) << std::setw(12)
            << text::format_fixed2(row.expression) << std::setw(8)
            << text::format_fixed2(row.data) << std::setw(9)
            << text::format_fixed2(row.total) << "\n";
    }
}

scoring::JudgeInput::Provenance provenance_from(const std::string& name) {
    if (name == "human") return scoring::JudgeInput::Provenance::human;
    if (name == "llm_judge" || name == "llm")
        return scoring::JudgeInput::Provenance::llm_judge;
    throw ValidationError("unknown judge provenance '" + name +
                          "' (expected human or llm_judge)");
}

std::map<std::string, scoring::JudgeInput> read_judge_csv(const std::string& path) {
    std::map<std::string, scoring::JudgeInput> judges;
    for (const csv::Row& row :
         csv::read_file(path, {"query_id", "conclusion", "content_dimensions",
                               "consistent", "language", "provenance"})) {
        scoring::JudgeInput judge;
        judge.conclusion_tier = static_cast<int>(csv::parse_int(row, 1, "conclusion"));
        judge.content_dims_tier =
            static_cast<int>(csv::parse_int(row, 2, "content_dimensions"));
        judge.consistent = csv::parse_int(row, 3, "consistent") != 0;
        judge.language_tier = static_cast<int>(csv::parse_int(row, 4, "language"));
        judge.provenance = provenance_from(row.fields[5]);
        judge.validate();
        judges[row.fields[0]] = judge;
    }
    return judges;
}

std::string stem_of(const fs::path& path) {
    const std::string name = path.filename().string();
    for (const std::string_view suffix : {".report.json", ".json"}) {
        if (name.size() > suffix.size() && name.ends_with(suffix))
            return name.substr(0, name.size() - suffix.size());
    }
    return name;
}

}  // namespace

int cmd_ingest(const config::RunConfig& cfg, const std::string& save_to,
               std::ostream& out, std::ostream& err) {
    try {
        auto store = std::make_shared<market::MarketStore>();
        const std::size_t rows = store->load_directory(cfg.store_dir);
        const auto stats = store->stats();
        out << "ingested " << rows << " rows from " << cfg.store_dir << "\n"
            << "instruments: " << stats.instruments << "\n"
            << "bars: " << stats.bars << "\n"
            << "fundamentals: " << stats.fundamentals << "\n"
            << "flows: " << stats.flows << "\n"
            << "news: " << stats.news << "\n"
            << "sector snapshots: " << stats.sector_snapshots << "\n";
        if (auto session = store->latest_session())
            out << "latest session: " << session->to_string() << "\n";
        if (!save_to.empty()) {
            fs::create_directories(save_to);
            store->save_directory(save_to);
            out << "normalized store written to " << save_to << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_analyze(const config::RunConfig& cfg, const std::string& query,
                const std::string& as_of, std::ostream& out, std::ostream& err) {
    std::unique_ptr<orchestrator::Engine> engine;
    try {
        cfg.validate();
        engine = std::make_unique<orchestrator::Engine>(load_store(cfg), cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        orchestrator::AnalyzeRequest request{query, parse_as_of(as_of)};
        const auto response = engine->analyze(request);

        fs::create_directories(cfg.output_dir);
        const fs::path json_path = fs::path(cfg.output_dir) / "report.json";
        const fs::path text_path = fs::path(cfg.output_dir) / "report.txt";
        write_file(json_path, orchestrator::report_to_json(response.report, 2));
        write_file(text_path, response.report.full_text);

        out << response.report.full_text << "\n";
        for (const auto& skipped : response.skipped_steps)
            err << "note: skipped " << skipped << " (no data)\n";
        out << "wrote " << json_path.string() << " and " << text_path.string() << "\n";
        return kExitOk;
    } catch (const AmbiguityError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& c : e.candidates()) err << "  candidate: " << c << "\n";
        return kExitUnresolved;
    } catch (const NotFoundError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnresolved;
    } catch (const BackendError& e) {
        err << "backend error: " << e.what() << "\n";
        return kExitBackend;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_batch(const config::RunConfig& cfg, const std::string& queries_file,
              const std::string& as_of, std::ostream& out, std::ostream& err) {
    std::vector<QueryEntry> queries;
    std::unique_ptr<orchestrator::Engine> engine;
    try {
        cfg.validate();
        queries = read_queries(queries_file);
        if (queries.empty()) {
            err << "error: no queries in " << queries_file << "\n";
            return kExitError;
        }
        engine = std::make_unique<orchestrator::Engine>(load_store(cfg), cfg);
        fs::create_directories(cfg.output_dir);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    std::vector<std::string> manifest_rows;
    std::size_t failures = 0;
    for (const QueryEntry& entry : queries) {
        std::string status = "ok", detail;
        try {
            orchestrator::AnalyzeRequest request{
                entry.query, parse_as_of(entry.as_of.empty() ? as_of : entry.as_of)};
            const auto response = engine->analyze(request);
            write_file(fs::path(cfg.output_dir) / (entry.id + ".report.json"),
                       orchestrator::report_to_json(response.report, 2));
            write_file(fs::path(cfg.output_dir) / (entry.id + ".report.txt"),
                       response.report.full_text);
        } catch (const Error& e) {
            status = "failed";
            detail = e.what();
            ++failures;
        }
        manifest_rows.push_back(
            csv::join({entry.id, entry.query, status, detail}));
    }

    const fs::path manifest = fs::path(cfg.output_dir) / "manifest.csv";
    std::ostringstream body;
    body << "query_id,query,status,error\n";
    for (const auto& row : manifest_rows) body << row << "\n";
    try {
        write_file(manifest, body.str());
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    out << queries.size() << " queries, " << failures << " failed; manifest at "
        << manifest.string() << "\n";
    return kExitOk;
}

int cmd_score(const config::RunConfig& cfg, const std::string& path,
              const std::string& mode, const std::string& judge_file,
              const std::string& model_id, std::ostream& out, std::ostream& err) {
    try {
        std::vector<scoring::ScoreRow> rows;
        if (fs::is_directory(path)) {
            scoring::ScoringMode scoring_mode;
            if (mode == "heuristic") scoring_mode = scoring::ScoringMode::heuristic;
            else if (mode == "assisted") scoring_mode = scoring::ScoringMode::assisted;
            else throw ValidationError("unknown scoring mode '" + mode +
                                       "' (expected heuristic or assisted)");

            std::map<std::string, scoring::JudgeInput> judges;
            if (scoring_mode == scoring::ScoringMode::assisted) {
                if (judge_file.empty()) {
                    err << "error: assisted scoring requires --judge\n";
                    return kExitError;
                }
                judges = read_judge_csv(judge_file);
            }

            const orchestrator::ResourceSet resources =
                cfg.resource_dir.empty()
                    ? orchestrator::ResourceSet()
                    : orchestrator::ResourceSet::with_overrides(cfg.resource_dir);

            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(path))
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());

            for (const fs::path& file : files) {
                std::ifstream in(file);
                std::stringstream buffer;
                buffer << in.rdbuf();
                orchestrator::Report report;
                try {
                    report = orchestrator::report_from_json(buffer.str());
                } catch (const Error& e) {
                    err << "warning: skipping " << file.filename().string() << ": "
                        << e.what() << "\n";
                    continue;
                }
                const std::string query_id = stem_of(file);
                scoring::JudgeInput judge;
                if (scoring_mode == scoring::ScoringMode::assisted) {
                    auto it = judges.find(query_id);
                    if (it == judges.end()) {
                        err << "warning: no judge row for " << query_id
                            << ", skipping\n";
                        continue;
                    }
                    judge = it->second;
                }
                rows.push_back({model_id, query_id,
                                scoring::score_report(report, judge, scoring_mode,
                                                      resources)});
            }
            if (rows.empty()) {
                err << "error: no scorable reports in " << path << "\n";
                return kExitError;
            }
            const fs::path scores_path = fs::path(path) / "scores.csv";
            scoring::write_scores_csv(scores_path.string(), rows);
            out << "wrote " << scores_path.string() << " (" << rows.size()
                << (rows.size() == 1 ? " row)\n" : " rows)\n");
        } else {
            rows = scoring::read_scores_csv(path);
            if (rows.empty()) {
                err << "error: no score rows in " << path << "\n";
                return kExitError;
            }
        }
        print_summary(out, scoring::aggregate_scores(rows));
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_agreement(const std::vector<std::string>& group_files, std::ostream& out,
                  std::ostream& err) {
    if (group_files.size() < 2) {
        err << "error: agreement needs at least two score files\n";
        return kExitError;
    }
    try {
        std::vector<scoring::GroupScores> groups;
        for (const std::string& file : group_files)
            groups.push_back(
                {fs::path(file).stem().string(), scoring::read_scores_csv(file)});

        const auto result = scoring::group_agreement(groups);

        std::vector<std::string> pair_names;
        for (const auto& pair : result.pairs)
            pair_names.push_back(pair.group_a + " & " + pair.group_b);

        out << std::left << std::setw(12) << "dimension";
        for (const auto& name : pair_names)
            out << std::right << std::setw(static_cast<int>(name.size()) + 3) << name;
        out << std::right << std::setw(11) << "Average" << "\n";

        for (std::size_t d = 0; d < scoring::kAllDimensions.size(); ++d) {
            std::string label = scoring::dimension_name(scoring::kAllDimensions[d]);
            label[0] = static_cast<char>(std::toupper(label[0]));
            out << std::left << std::setw(12) << label;
            for (std::size_t p = 0; p < result.pairs.size(); ++p)
                out << std::right
                    << std::setw(static_cast<int>(pair_names[p].size()) + 3)
                    << text::format_fixed2(result.pairs[p].tau[d] * 100.0);
            out << std::right << std::setw(11)
                << text::format_fixed2(result.average[d] * 100.0) << "\n";
        }
        if (result.missing_query_warnings > 0)
            err << "warning: " << result.missing_query_warnings
                << " query/group combinations lacked shared rows\n";
        if (result.undefined_tau_warnings > 0)
            err << "warning: " << result.undefined_tau_warnings
                << " fully tied rankings skipped\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace finsphere::cli
