#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/service.hpp"
#include "finsphere/common/errors.hpp"
#include "finsphere/market/store.hpp"
#include "finsphere/orchestrator/engine.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string store_dir;
    std::string output_dir;
    std::string mode;  // synthesizer mode for analyze/batch
    std::string resource_dir;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_mode) {
    cmd->add_option("--config", opts.config_path, "TOML config file");
    cmd->add_option("--store", opts.store_dir, "market data directory");
    cmd->add_option("--output", opts.output_dir, "output directory");
    cmd->add_option("--resources", opts.resource_dir,
                    "directory overriding embedded resources");
    if (with_mode)
        cmd->add_option("--mode", opts.mode, "synthesizer mode: template or llm");
}

finsphere::config::RunConfig resolve_config(const CommonOptions& opts) {
    namespace cfgns = finsphere::config;
    cfgns::RunConfig cfg;
    if (!opts.config_path.empty()) cfg = cfgns::load_config(opts.config_path);
    else cfg = cfgns::apply_env_overrides(cfg);
    if (!opts.store_dir.empty()) cfg.store_dir = opts.store_dir;
    if (!opts.output_dir.empty()) cfg.output_dir = opts.output_dir;
    if (!opts.resource_dir.empty()) cfg.resource_dir = opts.resource_dir;
    if (!opts.mode.empty()) cfg.synthesizer = cfgns::synthesizer_mode_from(opts.mode);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace finsphere;

    CLI::App app{"data-driven stock analysis pipeline"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* ingest = app.add_subcommand("ingest", "load and validate a store directory");
    std::string save_to;
    add_common(ingest, opts, false);
    ingest->add_option("--save-to", save_to, "write the normalized store here");

    auto* analyze = app.add_subcommand("analyze", "run one query through the pipeline");
    std::string query, as_of;
    add_common(analyze, opts, true);
    analyze->add_option("query", query, "natural-language stock query")->required();
    analyze->add_option("--as-of", as_of, "analysis instant (YYYY-MM-DD[THH:MM:SS])");

    auto* batch = app.add_subcommand("batch", "analyze every query in a file");
    std::string queries_file;
    add_common(batch, opts, true);
    batch->add_option("file", queries_file, "queries file (lines or query_id,query,as_of CSV)")
        ->required();
    batch->add_option("--as-of", as_of, "analysis instant for queries without one");

    auto* score = app.add_subcommand("score", "score reports or summarize a score CSV");
    std::string score_path, judge_file, model_id = "local", score_mode = "heuristic";
    add_common(score, opts, false);
    score->add_option("path", score_path, "reports directory or score CSV")->required();
    score->add_option("--mode", score_mode, "scoring mode: heuristic or assisted");
    score->add_option("--judge", judge_file, "judged tiers CSV for assisted mode");
    score->add_option("--model", model_id, "model id recorded in score rows");

    auto* agreement =
        app.add_subcommand("agreement", "inter-group rank agreement over score CSVs");
    std::vector<std::string> group_files;
    agreement->add_option("files", group_files, "two or more score CSV files")
        ->required();

    auto* serve = app.add_subcommand("serve", "HTTP service over the pipeline");
    std::string bind = "127.0.0.1:8080";
    add_common(serve, opts, true);
    serve->add_option("--bind", bind, "host:port to listen on");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ingest->parsed())
            return cli::cmd_ingest(resolve_config(opts), save_to);
        if (analyze->parsed())
            return cli::cmd_analyze(resolve_config(opts), query, as_of);
        if (batch->parsed())
            return cli::cmd_batch(resolve_config(opts), queries_file, as_of);
        if (score->parsed())
            return cli::cmd_score(resolve_config(opts), score_path, score_mode,
                                  judge_file, model_id);
        if (agreement->parsed()) return cli::cmd_agreement(group_files);
        if (serve->parsed()) {
            const auto cfg = resolve_config(opts);
            cfg.validate();

            const auto colon = bind.rfind(':');
            if (colon == std::string::npos) {
                std::cerr << "error: --bind expects host:port\n";
                return cli::kExitError;
            }
            const std::string host = bind.substr(0, colon);
            const int port = std::stoi(bind.substr(colon + 1));

            auto store = std::make_shared<market::MarketStore>();
            store->load_directory(cfg.store_dir);
            auto engine = std::make_shared<const orchestrator::Engine>(store, cfg);

            cli::Service service(engine);
            std::cout << "listening on " << host << ":" << port << "\n";
            if (!service.run(host, port)) {
                std::cerr << "error: cannot bind " << bind << "\n";
                return cli::kExitError;
            }
            return cli::kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitError;
    }
    return cli::kExitError;
}
