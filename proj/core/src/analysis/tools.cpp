#include "finsphere/analysis/tools.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "finsphere/analysis/narrative.hpp"
#include "finsphere/common/errors.hpp"
#include "finsphere/indicators/indicators.hpp"
#include "finsphere/indicators/series.hpp"

namespace finsphere::analysis {

namespace {

using market::DailyBar;
using market::MarketSnapshot;
using market::PeerMetric;

double round_to(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

std::optional<double> daily_change_pct(const std::vector<DailyBar>& bars) {
    if (bars.size() < 2) return std::nullopt;
    const double prev = bars[bars.size() - 2].close;
    if (prev <= 0) return std::nullopt;
    return round_to(100.0 * (bars.back().close - prev) / prev, 2);
}

/// Competition rank (descending) of `self` among peers with the metric.
std::optional<int> rank_among(const std::vector<PeerMetric>& peers,
                              const std::string& self_ticker,
                              std::optional<double> PeerMetric::* metric,
                              bool ascending = false,
                              const std::string& sector_filter = {}) {
    std::optional<double> own;
    std::vector<double> values;
    for (const auto& p : peers) {
        if (!sector_filter.empty() && p.sector_id != sector_filter) continue;
        const auto& v = p.*metric;
        if (!v) continue;
        values.push_back(*v);
        if (p.ticker == self_ticker) own = *v;
    }
    if (!own) return std::nullopt;
    int rank = 1;
    for (double v : values)
        if (ascending ? v < *own : v > *own) ++rank;
    return rank;
}

indicators::Series closes_series(const std::vector<DailyBar>& bars) {
    std::vector<double> values;
    std::vector<Date> dates;
    values.reserve(bars.size());
    dates.reserve(bars.size());
    for (const auto& b : bars) {
        values.push_back(b.close);
        dates.push_back(b.date);
    }
    return indicators::Series(std::move(dates), std::move(values));
}

void require_section(bool present, ToolKind kind, const char* what) {
    if (!present)
        throw DataUnavailableError(std::string("snapshot has no ") + what, to_string(kind));
}

// --- volume & price ---------------------------------------------------------

std::vector<Finding> volume_price_findings(const MarketSnapshot& s,
                                           const SignalRules& rules) {
    (void)rules;
    std::vector<Finding> out;
    const DailyBar& last = s.bars.back();
    out.push_back(Finding::text(labels::kInstrument, s.instrument.name));
    out.push_back(Finding::number(labels::kLatestClose, last.close, "yuan"));
    if (s.bars.size() >= 2)
        out.push_back(Finding::number(labels::kPreviousClose,
                                      s.bars[s.bars.size() - 2].close, "yuan"));
    if (auto change = daily_change_pct(s.bars))
        out.push_back(Finding::number(labels::kDailyChange, *change, "%"));
    out.push_back(Finding::number(labels::kVolume, last.volume, "shares"));
    out.push_back(Finding::number(labels::kTurnoverValue, last.turnover_value, "yuan"));
    if (s.instrument.float_shares > 0) {
        const double rate =
            round_to(indicators::turnover_rate(last.volume, s.instrument.float_shares), 2);
        out.push_back(Finding::number(labels::kTurnoverRate, rate, "%"));
    }
    if (auto r = rank_among(s.peers, s.instrument.ticker, &PeerMetric::turnover_rate))
        out.push_back(Finding::number(labels::kTurnoverRankMarket, *r, "place"));
    if (auto r = rank_among(s.peers, s.instrument.ticker, &PeerMetric::turnover_rate,
                            false, s.instrument.sector_id))
        out.push_back(Finding::number(labels::kTurnoverRankSector, *r, "place"));
    if (auto r = rank_among(s.peers, s.instrument.ticker, &PeerMetric::pct_change, false,
                            s.instrument.sector_id))
        out.push_back(Finding::number(labels::kChangeRankSector, *r, "place"));
    if (s.sector) {
        out.push_back(Finding::number(labels::kSectorIndex, s.sector->index_level, "points"));
        out.push_back(Finding::number(labels::kSectorChange, s.sector->pct_change, "%"));
        out.push_back(Finding::number(labels::kSectorHigh, s.sector->day_high, "points"));
        out.push_back(Finding::number(labels::kSectorLow, s.sector->day_low, "points"));
        out.push_back(
            Finding::number(labels::kSectorValue, s.sector->total_trading_value, "yuan"));
    }
    if (s.market_index) {
        out.push_back(
            Finding::number(labels::kMarketIndex, s.market_index->index_level, "points"));
        out.push_back(
            Finding::number(labels::kMarketChange, s.market_index->pct_change, "%"));
    }
    if (s.bars.size() >= 11) {
        const auto ar = indicators::window_amplitude_range(s.bars, 10);
        out.push_back(
            Finding::number(labels::kAmplitude10, round_to(ar.amplitude_pct, 2), "%"));
        out.push_back(Finding::number(labels::kRange10, round_to(ar.range_pct, 2), "%"));
    }
    return out;
}

std::string volume_price_narrative(NarrativeBuilder& b) {
    {
        std::string s = b.value(labels::kInstrument) + " closed at " +
                        b.value_with_unit(labels::kLatestClose);
        if (b.has(labels::kDailyChange)) {
            const double change = b.numeric(labels::kDailyChange);
            s += ", " + std::string(direction_word(change)) + " " +
                 b.value_with_unit(labels::kDailyChange) + " from the previous close of " +
                 b.value_with_unit(labels::kPreviousClose);
        }
        b.add(s + ".");
    }
    {
        std::string s = "Trading volume reached " + b.value_with_unit(labels::kVolume) +
                        " with trading value of " + b.value_with_unit(labels::kTurnoverValue);
        if (b.has(labels::kTurnoverRate))
            s += ", for a turnover rate of " + b.value_with_unit(labels::kTurnoverRate);
        b.add(s + ".");
    }
    if (b.has(labels::kTurnoverRankMarket) && b.has(labels::kTurnoverRankSector)) {
        b.add("By turnover rate the stock ranks " +
              b.ordinal_value(labels::kTurnoverRankMarket) + " overall and " +
              b.ordinal_value(labels::kTurnoverRankSector) + " in its sector.");
    }
    if (b.has(labels::kChangeRankSector))
        b.add("Its daily change ranks " + b.ordinal_value(labels::kChangeRankSector) +
              " in its sector.");
    if (b.has(labels::kSectorIndex)) {
        b.add("Its sector index stands at " + b.value(labels::kSectorIndex) + " (" +
              b.value_with_unit(labels::kSectorChange) + "), between a day high of " +
              b.value(labels::kSectorHigh) + " and a day low of " +
              b.value(labels::kSectorLow) + ", on sector trading value of " +
              b.value_with_unit(labels::kSectorValue) + ".");
    }
    if (b.has(labels::kMarketIndex))
        b.add("The whole-market index stands at " + b.value(labels::kMarketIndex) + " (" +
              b.value_with_unit(labels::kMarketChange) + ").");
    if (b.has(labels::kAmplitude10))
        b.add("Over the last ten sessions the amplitude is " +
              b.value_with_unit(labels::kAmplitude10) + " and the range is " +
              b.value_with_unit(labels::kRange10) + ".");
    return b.str();
}

// --- technical ---------------------------------------------------------------

/// Age in sessions (0 = latest) of the most recent event of `direction`,
/// given events indexed into a window of length `len`.
std::optional<int> latest_cross_age(const std::vector<indicators::CrossEvent>& events,
                                    indicators::CrossDirection direction,
                                    std::size_t len) {
    std::optional<int> age;
    for (const auto& e : events)
        if (e.direction == direction)
            age = static_cast<int>(len - 1 - e.index);
    return age;
}

std::vector<Finding> technical_findings(const MarketSnapshot& s, const SignalRules& rules) {
    std::vector<Finding> out;
    const auto closes = closes_series(s.bars);
    const double last_close = s.bars.back().close;
    out.push_back(Finding::text(labels::kInstrument, s.instrument.name));
    out.push_back(Finding::number(labels::kLatestClose, last_close, "yuan"));

    std::optional<double> ma5, ma10, ma20;
    auto last_sma = [&](int window) -> std::optional<double> {
        if (closes.size() < static_cast<std::size_t>(window)) return std::nullopt;
        return round_to(indicators::moving_average(closes, window,
                                                   indicators::MovingAverageKind::simple)
                            .back(),
                        3);
    };
    ma5 = last_sma(5);
    ma10 = last_sma(10);
    ma20 = last_sma(20);
    if (ma5) out.push_back(Finding::number(labels::kMa5, *ma5, "yuan"));
    if (ma10) out.push_back(Finding::number(labels::kMa10, *ma10, "yuan"));
    if (ma20) out.push_back(Finding::number(labels::kMa20, *ma20, "yuan"));
    if (ma5 && ma10 && ma20) {
        std::string alignment = "mixed";
        if (*ma5 > *ma10 && *ma10 > *ma20) alignment = "ascending";
        else if (*ma5 < *ma10 && *ma10 < *ma20) alignment = "descending";
        out.push_back(Finding::text(labels::kMaAlignment, alignment));
        std::string position = "mixed";
        if (last_close > *ma5 && last_close > *ma10 && last_close > *ma20)
            position = "above all";
        else if (last_close < *ma5 && last_close < *ma10 && last_close < *ma20)
            position = "below all";
        out.push_back(Finding::text(labels::kCloseVsMas, position));
    }

    std::optional<indicators::Series> rsi6, rsi12;
    if (closes.size() >= 7) {
        rsi6 = indicators::rsi(closes, 6);
        out.push_back(Finding::number(labels::kRsi6, round_to(rsi6->back(), 2)));
        out.push_back(Finding::text(labels::kRsiOverbought,
                                    rsi6->back() > rules.overbought_rsi ? "yes" : "no"));
    }
    if (closes.size() >= 13) {
        rsi12 = indicators::rsi(closes, 12);
        out.push_back(Finding::number(labels::kRsi12, round_to(rsi12->back(), 2)));
    }
    if (closes.size() >= 15)
        out.push_back(
            Finding::number(labels::kRsi14, round_to(indicators::rsi(closes, 14).back(), 2)));

    if (rsi6 && rsi12) {
        // Align both on the bars from index 12 onward (where RSI12 starts).
        const std::size_t len = rsi12->size();
        std::vector<double> fast(rsi6->values().end() - len, rsi6->values().end());
        const auto events = indicators::crosses(indicators::Series(fast), *rsi12);
        // Golden only counts with both series above the midline at the cross.
        std::optional<int> golden_age;
        for (const auto& e : events)
            if (e.direction == indicators::CrossDirection::golden &&
                fast[e.index] > 50.0 && (*rsi12)[e.index] > 50.0)
                golden_age = static_cast<int>(len - 1 - e.index);
        if (golden_age)
            out.push_back(Finding::number(labels::kRsiGoldenAge, *golden_age, "sessions"));
        if (auto age = latest_cross_age(events, indicators::CrossDirection::death, len))
            out.push_back(Finding::number(labels::kRsiDeathAge, *age, "sessions"));
    }

    if (closes.size() >= 26) {
        const auto macd = indicators::macd(closes);
        const auto events = indicators::crosses(macd.dif, macd.dea);
        const std::size_t len = macd.dif.size();
        if (auto age = latest_cross_age(events, indicators::CrossDirection::golden, len))
            out.push_back(Finding::number(labels::kMacdGoldenAge, *age, "sessions"));
        if (auto age = latest_cross_age(events, indicators::CrossDirection::death, len))
            out.push_back(Finding::number(labels::kMacdDeathAge, *age, "sessions"));
    }

    if (s.bars.size() >= 2) {
        const auto patterns = indicators::detect_bullish_engulfing(s.bars);
        if (!patterns.empty()) {
            const auto& latest = patterns.back();
            out.push_back(
                Finding::number(labels::kEngulfingKeyLevel, latest.key_level, "yuan"));
            out.push_back(Finding::text(labels::kEngulfingDate, latest.date.to_string()));
            out.push_back(Finding::text(labels::kEngulfingStatus,
                                        last_close > latest.key_level ? "active"
                                                                      : "invalidated"));
        }
    }
    return out;
}

std::string technical_narrative(NarrativeBuilder& b) {
    if (b.has(labels::kMa20)) {
        b.add("The five-day, ten-day, and twenty-day moving averages stand at " +
              b.value(labels::kMa5) + ", " + b.value(labels::kMa10) + ", and " +
              b.value_with_unit(labels::kMa20) + ", in " + b.value(labels::kMaAlignment) +
              " alignment, with the latest close of " +
              b.value_with_unit(labels::kLatestClose) + " sitting " +
              b.value(labels::kCloseVsMas) + " of them.");
    } else if (b.has(labels::kLatestClose)) {
        b.add("The latest close stands at " + b.value_with_unit(labels::kLatestClose) + ".");
    }
    if (b.has(labels::kRsi6)) {
        std::string s = "Relative strength readings stand at " + b.value(labels::kRsi6) +
                        " over six sessions";
        if (b.has(labels::kRsi12)) s += ", " + b.value(labels::kRsi12) + " over twelve";
        if (b.has(labels::kRsi14)) s += ", and " + b.value(labels::kRsi14) + " over fourteen";
        s += b.value(labels::kRsiOverbought) == "yes"
                 ? "; the short-horizon reading is overbought"
                 : "; no overbought condition is present";
        b.add(s + ".");
    }
    const auto ago = [&b](std::string_view label) {
        if (b.numeric(label) == 0) return std::string("in the latest session.");
        if (b.numeric(label) == 1) return b.value(label) + " session ago.";
        return b.value(label) + " sessions ago.";
    };
    if (b.has(labels::kRsiGoldenAge))
        b.add("An RSI golden cross above the midline formed " +
              ago(labels::kRsiGoldenAge));
    if (b.has(labels::kRsiDeathAge))
        b.add("An RSI death cross formed " + ago(labels::kRsiDeathAge));
    if (b.has(labels::kMacdGoldenAge))
        b.add("A MACD golden cross formed " + ago(labels::kMacdGoldenAge));
    if (b.has(labels::kMacdDeathAge))
        b.add("A MACD death cross formed " + ago(labels::kMacdDeathAge));
    if (b.has(labels::kEngulfingKeyLevel)) {
        const bool active = b.value(labels::kEngulfingStatus) == "active";
        b.add("A bullish engulfing pattern formed on " + b.value(labels::kEngulfingDate) +
              " with a key level of " + b.value_with_unit(labels::kEngulfingKeyLevel) +
              (active ? "; the pattern remains active while the price holds above that level."
                      : "; the pattern has been invalidated by a close below that level."));
    }
    return b.str();
}

// --- capital flow ------------------------------------------------------------

std::vector<Finding> capital_flow_findings(const MarketSnapshot& s,
                                           const SignalRules& rules) {
    std::vector<Finding> out;
    const auto& flows = s.flows;
    const auto& last = flows.back();
    if (flows.size() >= 5)
        out.push_back(
            Finding::number(labels::kDdx5, indicators::ddx_cumulative(flows, 5)));
    out.push_back(Finding::number(labels::kDdxDaily, last.ddx_daily));
    out.push_back(Finding::number(labels::kMarginBalance, last.margin_balance, "yuan"));
    if (flows.size() >= 5) {
        double inflow = 0;
        for (std::size_t i = flows.size() - 5; i < flows.size(); ++i)
            inflow += flows[i].margin_net_inflow;
        out.push_back(Finding::number(labels::kMarginInflow5, inflow, "yuan"));
        out.push_back(Finding::text(labels::kMarginTrend,
                                    inflow > 0 ? "inflow" : inflow < 0 ? "outflow" : "flat"));
    }
    out.push_back(
        Finding::number(labels::kHoldingPct, last.institutional_holding_pct, "%"));
    out.push_back(Finding::number(labels::kHoldingQoq, last.holding_qoq_change, "%"));
    out.push_back(Finding::text(labels::kControlLevel,
                                control_level(last.institutional_holding_pct, rules)));
    return out;
}

std::string capital_flow_narrative(NarrativeBuilder& b) {
    if (b.has(labels::kDdx5))
        b.add("The five-day cumulative DDX stands at " + b.value(labels::kDdx5) +
              ", with the latest daily reading at " + b.value(labels::kDdxDaily) + ".");
    else
        b.add("The latest daily DDX reading stands at " + b.value(labels::kDdxDaily) + ".");
    {
        std::string s = "Margin balance stands at " + b.value_with_unit(labels::kMarginBalance);
        if (b.has(labels::kMarginInflow5))
            s += ", with five-day margin net inflow of " +
                 b.value_with_unit(labels::kMarginInflow5) + " pointing to " +
                 b.value(labels::kMarginTrend);
        b.add(s + ".");
    }
    b.add("Institutional holders account for " + b.value_with_unit(labels::kHoldingPct) +
          " of shares (" + b.value_with_unit(labels::kHoldingQoq) +
          " quarter-over-quarter), indicating " + b.value(labels::kControlLevel) +
          " control by market leaders.");
    return b.str();
}

// --- fundamental --------------------------------------------------------------

std::string trend_word(double current, double previous) {
    if (current < previous) return "falling";
    if (current > previous) return "rising";
    return "flat";
}

std::vector<Finding> fundamental_findings(const MarketSnapshot& s,
                                          const SignalRules& rules) {
    (void)rules;
    std::vector<Finding> out;
    const auto& f = *s.fundamentals;
    out.push_back(Finding::number(labels::kRevenue, f.revenue, "yuan"));
    out.push_back(Finding::number(labels::kRevenueYoy, f.revenue_yoy, "%"));
    out.push_back(Finding::number(labels::kNetProfit, f.net_profit, "yuan"));
    out.push_back(Finding::number(labels::kNetProfitYoy, f.net_profit_yoy, "%"));
    out.push_back(Finding::number(labels::kNonRecurring, f.non_recurring_net_profit, "yuan"));
    out.push_back(Finding::number(labels::kEps, f.eps, "yuan"));
    out.push_back(Finding::number(labels::kRoe, f.roe, "%"));
    out.push_back(Finding::number(labels::kCurrentRatio, f.current_ratio));
    out.push_back(Finding::number(labels::kQuickRatio, f.quick_ratio));
    out.push_back(Finding::number(labels::kDebtToAsset, f.debt_to_asset, "%"));
    if (s.previous_fundamentals) {
        const auto& prev = *s.previous_fundamentals;
        out.push_back(Finding::text(
            labels::kNonRecurringTrend,
            trend_word(f.non_recurring_net_profit, prev.non_recurring_net_profit)));
        out.push_back(Finding::text(labels::kCurrentRatioTrend,
                                    trend_word(f.current_ratio, prev.current_ratio)));
    }
    out.push_back(Finding::number(labels::kPe, f.pe));
    out.push_back(Finding::number(labels::kPb, f.pb));
    if (auto r = rank_among(s.peers, s.instrument.ticker, &PeerMetric::pe, true,
                            s.instrument.sector_id))
        out.push_back(Finding::number(labels::kPeRankSector, *r, "place"));
    out.push_back(
        Finding::number(labels::kFeeCommissionShare, f.fee_commission_ratio, "%"));
    if (f.fee_commission_ratio > 100.0)
        out.push_back(Finding::text(labels::kRevenueMixFlag,
                                    "fee and commission income exceeds total revenue"));
    return out;
}

std::string fundamental_narrative(NarrativeBuilder& b) {
    {
        std::string s = "Revenue stands at " + b.value_with_unit(labels::kRevenue) + " (" +
                        b.value_with_unit(labels::kRevenueYoy) +
                        " year-over-year) and net profit at " +
                        b.value_with_unit(labels::kNetProfit) + " (" +
                        b.value_with_unit(labels::kNetProfitYoy) + " year-over-year)";
        s += ", with non-recurring net profit of " + b.value_with_unit(labels::kNonRecurring);
        if (b.has(labels::kNonRecurringTrend))
            s += " (" + b.value(labels::kNonRecurringTrend) + " versus the prior period)";
        b.add(s + ".");
    }
    b.add("Earnings per share stand at " + b.value_with_unit(labels::kEps) +
          " with return on equity of " + b.value_with_unit(labels::kRoe) + ".");
    {
        std::string s = "The current ratio is " + b.value(labels::kCurrentRatio);
        if (b.has(labels::kCurrentRatioTrend))
            s += " and " + b.value(labels::kCurrentRatioTrend);
        s += ", the quick ratio " + b.value(labels::kQuickRatio) +
             ", and the debt-to-asset ratio " + b.value_with_unit(labels::kDebtToAsset);
        b.add(s + ".");
    }
    {
        std::string s = "Valuation shows a price-to-earnings ratio of " +
                        b.value(labels::kPe) + " and price-to-book of " +
                        b.value(labels::kPb);
        if (b.has(labels::kPeRankSector))
            s += ", ranking " + b.ordinal_value(labels::kPeRankSector) +
                 " lowest in its sector on price-to-earnings";
        b.add(s + ".");
    }
    {
        std::string s = "Fee and commission income accounts for " +
                        b.value_with_unit(labels::kFeeCommissionShare) + " of total revenue";
        if (b.has(labels::kRevenueMixFlag)) s += ", exceeding total revenue itself";
        b.add(s + ".");
    }
    return b.str();
}

// --- news ----------------------------------------------------------------------

std::vector<Finding> news_findings(const MarketSnapshot& s, const SignalRules& rules) {
    (void)rules;
    std::vector<Finding> out;
    const auto& news = s.news;  // ascending by timestamp
    out.push_back(Finding::text(labels::kNewsCatalyst, news.back().headline));
    const char* slots[] = {labels::kNewsHeadline1, labels::kNewsHeadline2,
                           labels::kNewsHeadline3};
    std::size_t count = std::min<std::size_t>(news.size(), 3);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(Finding::text(slots[i], news[news.size() - 1 - i].headline));
    if (auto change = daily_change_pct(s.bars))
        out.push_back(Finding::number(labels::kDailyChange, *change, "%"));
    return out;
}

std::string news_narrative(NarrativeBuilder& b) {
    b.add("The most recent catalyst: \"" + b.value(labels::kNewsCatalyst) + "\".");
    if (b.has(labels::kNewsHeadline2)) {
        std::string s = "Earlier items: \"" + b.value(labels::kNewsHeadline2) + "\"";
        if (b.has(labels::kNewsHeadline3))
            s += "; \"" + b.value(labels::kNewsHeadline3) + "\"";
        b.add(s + ".");
    }
    if (b.has(labels::kDailyChange))
        b.add("The session move alongside this news was " +
              b.value_with_unit(labels::kDailyChange) + ".");
    return b.str();
}

}  // namespace

ToolReport run_tool(ToolKind kind, const MarketSnapshot& snapshot,
                    const SignalRules& rules) {
    std::vector<Finding> findings;
    switch (kind) {
        case ToolKind::volume_price:
            require_section(!snapshot.bars.empty(), kind, "bars");
            findings = volume_price_findings(snapshot, rules);
            break;
        case ToolKind::technical:
            require_section(!snapshot.bars.empty(), kind, "bars");
            findings = technical_findings(snapshot, rules);
            break;
        case ToolKind::capital_flow:
            require_section(!snapshot.flows.empty(), kind, "capital-flow records");
            findings = capital_flow_findings(snapshot, rules);
            break;
        case ToolKind::fundamental:
            require_section(snapshot.fundamentals.has_value(), kind,
                            "fundamentals record");
            findings = fundamental_findings(snapshot, rules);
            break;
        case ToolKind::news:
            require_section(!snapshot.news.empty(), kind, "news items");
            findings = news_findings(snapshot, rules);
            break;
    }
    NarrativeBuilder nb(findings);
    switch (kind) {
        case ToolKind::volume_price: volume_price_narrative(nb); break;
        case ToolKind::technical: technical_narrative(nb); break;
        case ToolKind::capital_flow: capital_flow_narrative(nb); break;
        case ToolKind::fundamental: fundamental_narrative(nb); break;
        case ToolKind::news: news_narrative(nb); break;
    }
    ToolReport report;
    report.kind = kind;
    report.narrative = nb.str();
    report.data_citations = nb.citations();
    report.signal = classify_signal(kind, findings, rules);
    report.findings = std::move(findings);
    return report;
}

}  // namespace finsphere::analysis
