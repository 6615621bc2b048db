#pragma once

#include <string>
#include <vector>

#include "finsphere/analysis/findings.hpp"

namespace finsphere::analysis {

/// Tunable thresholds behind classify_signal. The defaults reproduce the
/// verdicts carried by the bundled fixtures; deployments may retune them.
struct SignalRules {
    /// A cross counts as "recent" when it happened within this many sessions
    /// (age 0 = the latest bar, so recent means age < cross_recency_sessions).
    int cross_recency_sessions = 5;
    double overbought_rsi = 80.0;
    double ddx_bearish_below = -5.0;
    double ddx_bullish_above = 5.0;
    /// volume_price/news escape neutrality only on daily moves at least this
    /// large (percent, absolute).
    double extreme_pct_change = 9.5;
    /// Fundamental turns bearish when at least this many of {revenue YoY < 0,
    /// net profit YoY < 0, current ratio falling} hold.
    int fundamental_bearish_min_hits = 2;
    /// Institutional-holding thresholds (percent) for the control level.
    double control_low_below = 5.0;
    double control_high_above = 15.0;
};

/// Classifies a control level from institutional holding percentage.
std::string control_level(double institutional_holding_pct, const SignalRules& rules = {});

/// Deterministic findings -> signal mapping. Total: unmatched rule sets fall
/// through to neutral. Bullish rules are evaluated before bearish ones.
Signal classify_signal(ToolKind kind, const std::vector<Finding>& findings,
                       const SignalRules& rules = {});

}  // namespace finsphere::analysis
