#include "finsphere/orchestrator/engine.hpp"

#include <chrono>
#include <future>

#include "finsphere/analysis/tools.hpp"
#include "finsphere/common/errors.hpp"
#include "finsphere/orchestrator/backend_client.hpp"
#include "finsphere/orchestrator/resolve.hpp"
#include "finsphere/orchestrator/template_synthesizer.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace finsphere::orchestrator {

namespace {

class StageTimer {
public:
    explicit StageTimer(std::map<std::string, double>& sink) : sink_(sink) {}

    template <typename Fn>
    auto run(const std::string& stage, Fn&& fn) -> decltype(fn()) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            record(stage, start);
        } else {
            auto result = fn();
            record(stage, start);
            return result;
        }
    }

private:
    void record(const std::string& stage,
                std::chrono::steady_clock::time_point start) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        sink_[stage] =
            std::chrono::duration<double, std::milli>(elapsed).count();
    }

    std::map<std::string, double>& sink_;
};

}  // namespace

Engine::Engine(std::shared_ptr<const market::MarketStore> store, config::RunConfig cfg)
    : store_(std::move(store)), cfg_(std::move(cfg)) {
    cfg_.validate();
    if (!cfg_.resource_dir.empty())
        resources_ = ResourceSet::with_overrides(cfg_.resource_dir);
}

AnalyzeResponse Engine::analyze(const AnalyzeRequest& request) const {
    AnalyzeResponse response;
    StageTimer timer(response.timings_ms);

    const market::Instrument instrument = timer.run("resolve", [&] {
        std::vector<market::Instrument> universe;
        for (const auto& ticker : store_->tickers())
            universe.push_back(*store_->instrument(ticker));
        return resolve_instrument(request.query, universe);
    });

    Instant as_of;
    if (request.as_of) {
        as_of = *request.as_of;
    } else {
        const auto latest = store_->latest_session();
        if (!latest) throw EmptyHistoryError("store has no sessions to analyze");
        as_of = Instant::end_of_day(*latest);
    }

    response.plan = plan_analysis(request.query, instrument, as_of, cfg_.plan_narrowing);

    const market::MarketSnapshot snapshot = timer.run(
        "snapshot", [&] { return store_->snapshot(instrument.ticker, as_of); });

    // Fan out the tools; drop steps whose data is absent.
    struct StepRun {
        PlanStep step;
        std::future<analysis::ToolReport> future;
        std::chrono::steady_clock::time_point start;
    };
    std::vector<StepRun> runs;
    for (const auto& step : response.plan.steps)
        runs.push_back({step,
                        std::async(std::launch::async,
                                   [&, kind = step.kind] {
                                       return analysis::run_tool(kind, snapshot);
                                   }),
                        std::chrono::steady_clock::now()});

    std::vector<analysis::ToolReport> reports;
    std::vector<PlanStep> kept;
    for (auto& run : runs) {
        const std::string stage = "tool:" + analysis::to_string(run.step.kind);
        try {
            reports.push_back(run.future.get());
            kept.push_back(run.step);
        } catch (const DataUnavailableError&) {
            response.skipped_steps.push_back(analysis::to_string(run.step.kind));
        }
        const auto elapsed = std::chrono::steady_clock::now() - run.start;
        response.timings_ms[stage] =
            std::chrono::duration<double, std::milli>(elapsed).count();
    }
    response.plan.steps = std::move(kept);
    if (response.plan.steps.empty())
        throw DataUnavailableError("no analysis step has data for '" +
                                       instrument.ticker + "' at " + as_of.to_string(),
                                   "all");

    response.background =
        assemble_background(response.plan, reports, request.query);

    response.report = timer.run("synthesize", [&] {
        if (cfg_.synthesizer == config::SynthesizerMode::llm)
            return synthesize_llm(response.background, *cfg_.backend,
                                  resources_.fewshot_examples(), resources_);
        return synthesize_template(response.background);
    });
    return response;
}

std::string analyze_response_to_json(const AnalyzeResponse& response, int indent) {
    nlohmann::ordered_json obj;
    obj["report"] = nlohmann::ordered_json::parse(report_to_json(response.report));
    obj["background"] =
        nlohmann::ordered_json::parse(background_to_json(response.background));
    nlohmann::ordered_json plan;
    plan["ticker"] = response.plan.ticker;
    plan["as_of"] = response.plan.as_of.to_string();
    plan["steps"] = nlohmann::ordered_json::array();
    for (const auto& step : response.plan.steps)
        plan["steps"].push_back({{"kind", analysis::to_string(step.kind)},
                                 {"rationale", step.rationale}});
    obj["plan"] = std::move(plan);
    obj["timings_ms"] = response.timings_ms;
    obj["skipped_steps"] = response.skipped_steps;
    if (!response.report.parse_warnings.empty())
        obj["parse_warnings"] = response.report.parse_warnings;
    return obj.dump(indent);
}

}  // namespace finsphere::orchestrator
