#pragma once

#include "finsphere/analysis/findings.hpp"
#include "finsphere/analysis/signal_rules.hpp"
#include "finsphere/market/types.hpp"

namespace finsphere::analysis {

/// Runs one quantitative tool over an immutable snapshot. Pure: consults
/// nothing but `snapshot` and `rules`, so identical inputs yield identical
/// reports and tools may run concurrently.
///
/// Throws DataUnavailableError when the snapshot lacks the section the kind
/// requires (bars for volume_price/technical, flows for capital_flow,
/// fundamentals for fundamental, news items for news).
ToolReport run_tool(ToolKind kind, const market::MarketSnapshot& snapshot,
                    const SignalRules& rules = {});

}  // namespace finsphere::analysis
