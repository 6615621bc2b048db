#include "finsphere/orchestrator/plan.hpp"

#include "finsphere/common/text.hpp"

namespace finsphere::orchestrator {

namespace {

using analysis::ToolKind;

struct KindSpec {
    ToolKind kind;
    const char* rationale;
    // Query phrases that select this kind when narrowing is enabled.
    std::initializer_list<const char*> cues;
};

const KindSpec kCanonicalSteps[] = {
    {ToolKind::volume_price,
     "establish the latest price, volume, and turnover context",
     {"volume", "price action", "turnover"}},
    {ToolKind::technical,
     "read trend, momentum, and pattern signals from the chart",
     {"technical", "chart", "indicator", "momentum"}},
    {ToolKind::capital_flow,
     "gauge large-order and margin positioning behind the move",
     {"capital flow", "capital", "ddx", "margin", "fund flow"}},
    {ToolKind::fundamental,
     "weigh earnings quality, solvency, and valuation",
     {"fundamental", "valuation", "earnings", "financials"}},
    {ToolKind::news,
     "surface the freshest catalysts around the stock",
     {"news", "catalyst", "announcement"}},
};

}  // namespace

AnalysisPlan plan_analysis(const std::string& query, const market::Instrument& instrument,
                           Instant as_of, bool narrowing) {
    AnalysisPlan plan;
    plan.ticker = instrument.ticker;
    plan.as_of = as_of;

    std::vector<const KindSpec*> selected;
    if (narrowing) {
        for (const auto& spec : kCanonicalSteps)
            for (const char* cue : spec.cues)
                if (text::contains_phrase(query, cue)) {
                    selected.push_back(&spec);
                    break;
                }
    }
    if (selected.empty())
        for (const auto& spec : kCanonicalSteps) selected.push_back(&spec);

    for (const KindSpec* spec : selected)
        plan.steps.push_back({spec->kind, spec->rationale});
    return plan;
}

}  // namespace finsphere::orchestrator
