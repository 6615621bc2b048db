#include "cli/service.hpp"

#include <atomic>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "finsphere/common/errors.hpp"
#include "finsphere/scoring/judge.hpp"

namespace finsphere::cli {

namespace {

using json = nlohmann::ordered_json;

void reply_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& message,
                 const std::vector<std::string>& candidates = {}) {
    json body{{"error", message}};
    if (!candidates.empty()) body["candidates"] = candidates;
    reply_json(res, status, body);
}

bool require_json_content(const httplib::Request& req, httplib::Response& res) {
    const std::string type = req.get_header_value("Content-Type");
    if (type.rfind("application/json", 0) != 0) {
        reply_error(res, 415, "expected application/json content");
        return false;
    }
    return true;
}

/// Runs `handler` and maps library errors onto HTTP statuses.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& handler) {
    try {
        handler();
    } catch (const AmbiguityError& e) {
        reply_error(res, 422, e.what(), e.candidates());
    } catch (const BackendError& e) {
        reply_error(res, 502, e.what());
    } catch (const ConfigError& e) {
        reply_error(res, 500, e.what());
    } catch (const Error& e) {
        reply_error(res, 422, e.what());
    } catch (const std::exception& e) {
        reply_error(res, 500, e.what());
    }
}

scoring::JudgeInput judge_from_json(const json& obj) {
    scoring::JudgeInput judge;
    judge.conclusion_tier = obj.value("conclusion", judge.conclusion_tier);
    judge.content_dims_tier = obj.value("content_dimensions", judge.content_dims_tier);
    judge.consistent = obj.value("consistent", judge.consistent);
    judge.language_tier = obj.value("language", judge.language_tier);
    const std::string provenance = obj.value("provenance", "human");
    if (provenance == "human")
        judge.provenance = scoring::JudgeInput::Provenance::human;
    else if (provenance == "llm_judge" || provenance == "llm")
        judge.provenance = scoring::JudgeInput::Provenance::llm_judge;
    else
        throw ValidationError("unknown judge provenance '" + provenance + "'");
    judge.validate();
    return judge;
}

json rubric_to_json(const scoring::RubricScore& score) {
    return json{{"conclusion", score.conclusion},
                {"content_dimensions", score.content_dimensions},
                {"logical_consistency", score.logical_consistency},
                {"structure", score.structure},
                {"language", score.language},
                {"data", score.data},
                {"content", score.content()},
                {"expression", score.expression()},
                {"total", score.total()}};
}

}  // namespace

struct Service::Impl {
    std::shared_ptr<const orchestrator::Engine> engine;
    orchestrator::ResourceSet resources;
    httplib::Server server;
    std::thread thread;

    explicit Impl(std::shared_ptr<const orchestrator::Engine> eng)
        : engine(std::move(eng)),
          resources(engine->config().resource_dir.empty()
                        ? orchestrator::ResourceSet()
                        : orchestrator::ResourceSet::with_overrides(
                              engine->config().resource_dir)) {
        server.new_task_queue = [] { return new httplib::ThreadPool(32); };
        routes();
    }

    void routes() {
        server.Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
            guarded(res, [&] {
                const auto stats = engine->store().stats();
                json body{{"status", "ok"},
                          {"instruments", stats.instruments},
                          {"bars", stats.bars},
                          {"fundamentals", stats.fundamentals},
                          {"flows", stats.flows},
                          {"news", stats.news},
                          {"sector_snapshots", stats.sector_snapshots}};
                if (auto session = engine->store().latest_session())
                    body["latest_session"] = session->to_string();
                reply_json(res, 200, body);
            });
        });

        server.Post("/v1/analyze",
                    [this](const httplib::Request& req, httplib::Response& res) {
            if (!require_json_content(req, res)) return;
            guarded(res, [&] {
                json body;
                try {
                    body = json::parse(req.body);
                } catch (const json::exception& e) {
                    reply_error(res, 400, std::string("invalid JSON: ") + e.what());
                    return;
                }
                if (!body.contains("query") || !body["query"].is_string() ||
                    body["query"].get<std::string>().empty()) {
                    reply_error(res, 422, "field 'query': required non-empty string");
                    return;
                }
                orchestrator::AnalyzeRequest request;
                request.query = body["query"].get<std::string>();
                if (body.contains("as_of") && !body["as_of"].is_null())
                    request.as_of = Instant::parse(body["as_of"].get<std::string>());

                const auto response = engine->analyze(request);
                res.status = 200;
                res.set_content(orchestrator::analyze_response_to_json(response),
                                "application/json");
            });
        });

        server.Post("/v1/score",
                    [this](const httplib::Request& req, httplib::Response& res) {
            if (!require_json_content(req, res)) return;
            guarded(res, [&] {
                json body;
                try {
                    body = json::parse(req.body);
                } catch (const json::exception& e) {
                    reply_error(res, 400, std::string("invalid JSON: ") + e.what());
                    return;
                }
                orchestrator::Report report;
                if (body.contains("report") && body["report"].is_object())
                    report = orchestrator::report_from_json(body["report"].dump());
                else if (body.contains("report_text") && body["report_text"].is_string())
                    report =
                        orchestrator::parse_report_text(body["report_text"].get<std::string>());
                else {
                    reply_error(res, 422,
                                "expected a 'report' object or 'report_text' string");
                    return;
                }

                const std::string mode = body.value("mode", "heuristic");
                scoring::ScoringMode scoring_mode;
                if (mode == "heuristic") scoring_mode = scoring::ScoringMode::heuristic;
                else if (mode == "assisted") scoring_mode = scoring::ScoringMode::assisted;
                else {
                    reply_error(res, 422, "field 'mode': expected heuristic or assisted");
                    return;
                }

                scoring::JudgeInput judge;
                if (body.contains("judge") && body["judge"].is_object())
                    judge = judge_from_json(body["judge"]);
                else if (scoring_mode == scoring::ScoringMode::assisted) {
                    reply_error(res, 422, "assisted mode requires a 'judge' object");
                    return;
                }

                const auto score =
                    scoring::score_report(report, judge, scoring_mode, resources);
                reply_json(res, 200, rubric_to_json(score));
            });
        });
    }
};

Service::Service(std::shared_ptr<const orchestrator::Engine> engine)
    : impl_(std::make_unique<Impl>(std::move(engine))) {}

Service::~Service() { stop(); }

int Service::start(const std::string& host, int port) {
    int bound = port;
    if (port == 0) {
        bound = impl_->server.bind_to_any_port(host);
        if (bound <= 0) return 0;
    } else if (!impl_->server.bind_to_port(host, port)) {
        return 0;
    }
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return bound;
}

bool Service::run(const std::string& host, int port) {
    return impl_->server.listen(host, port);
}

void Service::stop() {
    if (!impl_) return;
    impl_->server.stop();
    if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace finsphere::cli
