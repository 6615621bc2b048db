#include "finsphere/analysis/signal_rules.hpp"

namespace finsphere::analysis {

namespace {

bool numeric_value(const std::vector<Finding>& findings, std::string_view label,
                   double& out) {
    const Finding* f = find_finding(findings, label);
    if (!f || !f->is_numeric()) return false;
    out = f->numeric();
    return true;
}

bool text_equals(const std::vector<Finding>& findings, std::string_view label,
                 std::string_view expected) {
    const Finding* f = find_finding(findings, label);
    return f && !f->is_numeric() && f->text_value() == expected;
}

bool recent_cross(const std::vector<Finding>& findings, std::string_view label,
                  const SignalRules& rules) {
    double age = 0;
    return numeric_value(findings, label, age) && age < rules.cross_recency_sessions;
}

Signal classify_technical(const std::vector<Finding>& findings, const SignalRules& rules) {
    const bool overbought = text_equals(findings, labels::kRsiOverbought, "yes");
    const bool recent_golden = recent_cross(findings, labels::kRsiGoldenAge, rules) ||
                               recent_cross(findings, labels::kMacdGoldenAge, rules);
    const bool engulfing_active =
        text_equals(findings, labels::kEngulfingStatus, "active");
    if ((recent_golden || engulfing_active) && !overbought) return Signal::bullish;

    const bool recent_death = recent_cross(findings, labels::kRsiDeathAge, rules) ||
                              recent_cross(findings, labels::kMacdDeathAge, rules);
    const bool below_descending_stack =
        text_equals(findings, labels::kCloseVsMas, "below all") &&
        text_equals(findings, labels::kMaAlignment, "descending");
    if (recent_death || below_descending_stack) return Signal::bearish;
    return Signal::neutral;
}

Signal classify_fundamental(const std::vector<Finding>& findings,
                            const SignalRules& rules) {
    double revenue_yoy = 0, profit_yoy = 0;
    const bool has_revenue = numeric_value(findings, labels::kRevenueYoy, revenue_yoy);
    const bool has_profit = numeric_value(findings, labels::kNetProfitYoy, profit_yoy);
    const bool ratio_falling =
        text_equals(findings, labels::kCurrentRatioTrend, "falling");
    const bool ratio_rising = text_equals(findings, labels::kCurrentRatioTrend, "rising");

    if (has_revenue && revenue_yoy > 0 && has_profit && profit_yoy > 0 && ratio_rising)
        return Signal::bullish;
    int bearish_hits = 0;
    if (has_revenue && revenue_yoy < 0) ++bearish_hits;
    if (has_profit && profit_yoy < 0) ++bearish_hits;
    if (ratio_falling) ++bearish_hits;
    if (bearish_hits >= rules.fundamental_bearish_min_hits) return Signal::bearish;
    return Signal::neutral;
}

Signal classify_capital_flow(const std::vector<Finding>& findings,
                             const SignalRules& rules) {
    double ddx = 0;
    if (!numeric_value(findings, labels::kDdx5, ddx)) return Signal::neutral;
    if (ddx > rules.ddx_bullish_above) return Signal::bullish;
    if (ddx < rules.ddx_bearish_below) return Signal::bearish;
    return Signal::neutral;
}

Signal classify_by_move(const std::vector<Finding>& findings, const SignalRules& rules) {
    double change = 0;
    if (!numeric_value(findings, labels::kDailyChange, change)) return Signal::neutral;
    if (change >= rules.extreme_pct_change) return Signal::bullish;
    if (change <= -rules.extreme_pct_change) return Signal::bearish;
    return Signal::neutral;
}

}  // namespace

std::string control_level(double institutional_holding_pct, const SignalRules& rules) {
    if (institutional_holding_pct < rules.control_low_below) return "low";
    if (institutional_holding_pct > rules.control_high_above) return "high";
    return "moderate";
}

Signal classify_signal(ToolKind kind, const std::vector<Finding>& findings,
                       const SignalRules& rules) {
    switch (kind) {
        case ToolKind::technical: return classify_technical(findings, rules);
        case ToolKind::fundamental: return classify_fundamental(findings, rules);
        case ToolKind::capital_flow: return classify_capital_flow(findings, rules);
        case ToolKind::volume_price:
        case ToolKind::news: return classify_by_move(findings, rules);
    }
    return Signal::neutral;
}

}  // namespace finsphere::analysis
