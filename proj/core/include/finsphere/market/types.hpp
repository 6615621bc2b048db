#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsphere/common/time.hpp"

namespace finsphere::market {

struct Instrument {
    std::string ticker;
    std::string name;
    std::vector<std::string> aliases;
    std::string sector_id;
    double float_shares = 0.0;  // tradable shares, > 0

    friend bool operator==(const Instrument&, const Instrument&) = default;
};

/// One session's OHLCV plus large-order flow volumes. Visible to as-of
/// queries once the session has closed (end of its calendar day).
struct DailyBar {
    Date date;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double volume = 0.0;          // shares
    double turnover_value = 0.0;  // currency
    double large_order_buy_volume = 0.0;
    double large_order_sell_volume = 0.0;

    Instant visible_at() const { return Instant::end_of_day(date); }

    friend bool operator==(const DailyBar&, const DailyBar&) = default;
};

struct FundamentalsRecord {
    Date period_end;
    double revenue = 0.0;
    double revenue_yoy = 0.0;  // percent, 0-centered
    double net_profit = 0.0;
    double net_profit_yoy = 0.0;
    double non_recurring_net_profit = 0.0;
    double eps = 0.0;
    double roe = 0.0;
    double net_margin = 0.0;
    double gross_margin = 0.0;
    double pe = 0.0;
    double pb = 0.0;
    double current_ratio = 0.0;
    double quick_ratio = 0.0;
    double debt_to_asset = 0.0;
    double fee_commission_ratio = 0.0;  // percent of revenue

    Instant visible_at() const { return Instant::end_of_day(period_end); }

    friend bool operator==(const FundamentalsRecord&, const FundamentalsRecord&) = default;
};

struct CapitalFlowRecord {
    Date date;
    double ddx_daily = 0.0;  // signed large-order net-flow index
    double margin_balance = 0.0;
    double margin_net_inflow = 0.0;
    double institutional_holding_pct = 0.0;
    double holding_qoq_change = 0.0;

    Instant visible_at() const { return Instant::end_of_day(date); }

    friend bool operator==(const CapitalFlowRecord&, const CapitalFlowRecord&) = default;
};

struct NewsItem {
    Instant timestamp;
    std::string headline;
    std::string body;
    std::vector<std::string> tags;

    friend bool operator==(const NewsItem&, const NewsItem&) = default;
};

struct SectorSnapshot {
    std::string sector_id;
    Date date;
    double index_level = 0.0;
    double pct_change = 0.0;
    double day_high = 0.0;
    double day_low = 0.0;
    double total_trading_value = 0.0;

    Instant visible_at() const { return Instant::end_of_day(date); }

    friend bool operator==(const SectorSnapshot&, const SectorSnapshot&) = default;
};

/// Per-instrument metrics used for ranking, taken on the snapshot's session
/// date. Covers the whole universe (tagged by sector) so tools can compute
/// both overall and sector ranks from the snapshot alone.
struct PeerMetric {
    std::string ticker;
    std::string name;
    std::string sector_id;
    std::optional<double> pct_change;
    std::optional<double> turnover_rate;
    std::optional<double> volume;
    std::optional<double> turnover_value;
    std::optional<double> pe;
    std::optional<double> pb;

    friend bool operator==(const PeerMetric&, const PeerMetric&) = default;
};

/// Everything an analysis tool may consult about one instrument, frozen at
/// as_of. No contained record postdates as_of.
struct MarketSnapshot {
    Instrument instrument;
    Instant as_of;
    std::vector<DailyBar> bars;  // trailing window, ascending by date
    std::optional<FundamentalsRecord> fundamentals;          // latest at as_of
    std::optional<FundamentalsRecord> previous_fundamentals; // one period earlier
    std::vector<CapitalFlowRecord> flows;                    // trailing window
    std::vector<NewsItem> news;                              // timestamp <= as_of
    std::optional<SectorSnapshot> sector;
    std::optional<SectorSnapshot> market_index;
    std::vector<PeerMetric> peers;  // whole universe, including self
};

}  // namespace finsphere::market
