#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "finsphere/config/config.hpp"
#include "finsphere/market/store.hpp"
#include "finsphere/orchestrator/background.hpp"
#include "finsphere/orchestrator/plan.hpp"
#include "finsphere/orchestrator/report.hpp"

namespace finsphere::orchestrator {

struct AnalyzeRequest {
    std::string query;
    /// Defaults to the end of the store's latest session when absent.
    std::optional<Instant> as_of;
};

struct AnalyzeResponse {
    Report report;
    BackgroundDoc background;
    AnalysisPlan plan;
    /// Milliseconds per stage: one "tool:<kind>" entry per plan step plus
    /// resolve/snapshot/synthesize.
    std::map<std::string, double> timings_ms;
    /// Plan steps dropped because the snapshot lacked their data.
    std::vector<std::string> skipped_steps;
};

/// One query -> report pipeline over an immutable store. Stateless across
/// requests; tool fan-out runs concurrently.
class Engine {
public:
    Engine(std::shared_ptr<const market::MarketStore> store, config::RunConfig cfg);

    AnalyzeResponse analyze(const AnalyzeRequest& request) const;

    const market::MarketStore& store() const { return *store_; }
    const config::RunConfig& config() const { return cfg_; }

private:
    std::shared_ptr<const market::MarketStore> store_;
    config::RunConfig cfg_;
    ResourceSet resources_;
};

/// JSON object {report, background, plan, timings_ms, skipped_steps}.
std::string analyze_response_to_json(const AnalyzeResponse& response, int indent = -1);

}  // namespace finsphere::orchestrator
