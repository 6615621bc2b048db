#pragma once

#include <string>
#include <variant>
#include <vector>

namespace finsphere::analysis {

enum class ToolKind { volume_price, technical, capital_flow, fundamental, news };

ToolKind tool_kind_from(const std::string& name);
std::string to_string(ToolKind kind);
/// Human-facing section title, e.g. "Volume and Price Analysis".
std::string display_name(ToolKind kind);

enum class Signal { bullish, bearish, neutral };

Signal signal_from(const std::string& name);
std::string to_string(Signal signal);

/// One labelled fact extracted by a tool. Numeric values feed the citation
/// count; text values carry qualitative states ("active", "descending", ...).
struct Finding {
    std::string label;
    std::variant<double, std::string> value;
    std::string unit;

    static Finding number(std::string label, double value, std::string unit = "");
    static Finding text(std::string label, std::string value, std::string unit = "");

    bool is_numeric() const { return std::holds_alternative<double>(value); }
    double numeric() const { return std::get<double>(value); }
    const std::string& text_value() const { return std::get<std::string>(value); }
    /// Value as rendered into narratives (format_number for numerics).
    std::string value_text() const;

    bool operator==(const Finding&) const = default;
};

struct ToolReport {
    ToolKind kind = ToolKind::volume_price;
    std::vector<Finding> findings;
    std::string narrative;
    Signal signal = Signal::neutral;
    int data_citations = 0;

    bool operator==(const ToolReport&) const = default;
};

/// Label constants shared between tool builders and the signal classifier so
/// rule evaluation never depends on free-text matching.
namespace labels {
inline constexpr const char* kInstrument = "instrument";
inline constexpr const char* kLatestClose = "latest close";
inline constexpr const char* kPreviousClose = "previous close";
inline constexpr const char* kDailyChange = "daily change";
inline constexpr const char* kVolume = "trading volume";
inline constexpr const char* kTurnoverValue = "trading value";
inline constexpr const char* kTurnoverRate = "turnover rate";
inline constexpr const char* kTurnoverRankMarket = "turnover rank overall";
inline constexpr const char* kTurnoverRankSector = "turnover rank in sector";
inline constexpr const char* kChangeRankSector = "price change rank in sector";
inline constexpr const char* kSectorIndex = "sector index";
inline constexpr const char* kSectorChange = "sector change";
inline constexpr const char* kSectorHigh = "sector day high";
inline constexpr const char* kSectorLow = "sector day low";
inline constexpr const char* kSectorValue = "sector trading value";
inline constexpr const char* kMarketIndex = "market index";
inline constexpr const char* kMarketChange = "market change";
inline constexpr const char* kAmplitude10 = "ten-day amplitude";
inline constexpr const char* kRange10 = "ten-day range";

inline constexpr const char* kMa5 = "MA5";
inline constexpr const char* kMa10 = "MA10";
inline constexpr const char* kMa20 = "MA20";
inline constexpr const char* kMaAlignment = "moving average alignment";
inline constexpr const char* kCloseVsMas = "close relative to moving averages";
inline constexpr const char* kRsi6 = "RSI6";
inline constexpr const char* kRsi12 = "RSI12";
inline constexpr const char* kRsi14 = "RSI14";
inline constexpr const char* kRsiOverbought = "RSI overbought";
inline constexpr const char* kRsiGoldenAge = "RSI golden cross age";
inline constexpr const char* kRsiDeathAge = "RSI death cross age";
inline constexpr const char* kMacdGoldenAge = "MACD golden cross age";
inline constexpr const char* kMacdDeathAge = "MACD death cross age";
inline constexpr const char* kEngulfingKeyLevel = "bullish engulfing key level";
inline constexpr const char* kEngulfingDate = "bullish engulfing date";
inline constexpr const char* kEngulfingStatus = "bullish engulfing status";

inline constexpr const char* kDdx5 = "five-day cumulative DDX";
inline constexpr const char* kDdxDaily = "latest daily DDX";
inline constexpr const char* kMarginBalance = "margin balance";
inline constexpr const char* kMarginInflow5 = "five-day margin net inflow";
inline constexpr const char* kMarginTrend = "margin flow direction";
inline constexpr const char* kHoldingPct = "institutional holding";
inline constexpr const char* kHoldingQoq = "holding change quarter-over-quarter";
inline constexpr const char* kControlLevel = "control level";

inline constexpr const char* kRevenue = "revenue";
inline constexpr const char* kRevenueYoy = "revenue year-over-year";
inline constexpr const char* kNetProfit = "net profit";
inline constexpr const char* kNetProfitYoy = "net profit year-over-year";
inline constexpr const char* kNonRecurring = "non-recurring net profit";
inline constexpr const char* kNonRecurringTrend = "non-recurring net profit trend";
inline constexpr const char* kEps = "earnings per share";
inline constexpr const char* kRoe = "return on equity";
inline constexpr const char* kCurrentRatio = "current ratio";
inline constexpr const char* kCurrentRatioTrend = "current ratio trend";
inline constexpr const char* kQuickRatio = "quick ratio";
inline constexpr const char* kDebtToAsset = "debt-to-asset ratio";
inline constexpr const char* kPe = "price-to-earnings ratio";
inline constexpr const char* kPb = "price-to-book ratio";
inline constexpr const char* kPeRankSector = "PE rank in sector (low to high)";
inline constexpr const char* kFeeCommissionShare = "fee and commission share of revenue";
inline constexpr const char* kRevenueMixFlag = "revenue mix flag";

inline constexpr const char* kNewsCatalyst = "movement catalyst";
inline constexpr const char* kNewsHeadline1 = "latest news 1";
inline constexpr const char* kNewsHeadline2 = "latest news 2";
inline constexpr const char* kNewsHeadline3 = "latest news 3";
}  // namespace labels

/// Finds the first finding with the given label, or nullptr.
const Finding* find_finding(const std::vector<Finding>& findings, std::string_view label);

/// JSON object with fields in stable order: kind, findings, narrative,
/// signal, data_citations.
std::string tool_report_to_json(const ToolReport& report, int indent = -1);
ToolReport tool_report_from_json(const std::string& json_text);

}  // namespace finsphere::analysis
