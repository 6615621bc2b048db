#pragma once

#include <string>
#include <vector>

#include "finsphere/analysis/findings.hpp"
#include "finsphere/common/time.hpp"
#include "finsphere/market/types.hpp"

namespace finsphere::orchestrator {

struct PlanStep {
    analysis::ToolKind kind = analysis::ToolKind::volume_price;
    std::string rationale;

    friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct AnalysisPlan {
    std::string ticker;
    Instant as_of;
    std::vector<PlanStep> steps;  // non-empty, kinds unique
};

/// Decomposes a query into tool steps. The default plan runs all five kinds
/// in canonical order (volume_price, technical, capital_flow, fundamental,
/// news), each step carrying a one-line rationale. With `narrowing` enabled,
/// a query that names specific analysis modes runs only those.
AnalysisPlan plan_analysis(const std::string& query, const market::Instrument& instrument,
                           Instant as_of, bool narrowing = false);

}  // namespace finsphere::orchestrator
