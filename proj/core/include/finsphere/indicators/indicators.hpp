#pragma once

#include <vector>

#include "finsphere/indicators/series.hpp"
#include "finsphere/market/types.hpp"

namespace finsphere::indicators {

enum class MovingAverageKind { simple, exponential };
enum class CrossDirection { golden, death };

/// Fast series crossing above (golden) or below (death) the slow one.
/// `index` addresses the shared input index space of crosses().
struct CrossEvent {
    std::size_t index = 0;
    Date date;
    CrossDirection direction = CrossDirection::golden;

    friend bool operator==(const CrossEvent&, const CrossEvent&) = default;
};

enum class PatternKind { bullish_engulfing };

/// Candlestick reversal occurrence; key_level is the pattern's support price.
struct PatternEvent {
    Date date;
    PatternKind kind = PatternKind::bullish_engulfing;
    double key_level = 0.0;

    friend bool operator==(const PatternEvent&, const PatternEvent&) = default;
};

/// Simple output starts at input index window-1 (length n-window+1);
/// exponential output is full length, seeded with the first value and
/// smoothed with multiplier 2/(window+1).
Series moving_average(const Series& s, int window, MovingAverageKind kind);

/// Wilder-smoothed relative strength index in [0,100]; output starts at
/// input index `period` (length n-period). All gains -> 100, all losses -> 0,
/// fully flat windows read 50.
Series rsi(const Series& closes, int period);

struct MacdResult {
    Series dif;        // EMA(fast) - EMA(slow)
    Series dea;        // EMA(dif, signal)
    Series histogram;  // dif - dea
};

MacdResult macd(const Series& closes, int fast = 12, int slow = 26, int signal = 9);

/// Golden at i iff fast[i-1] <= slow[i-1] and fast[i] > slow[i]; death is
/// symmetric. Touch-then-separate registers at the separation index.
std::vector<CrossEvent> crosses(const Series& fast, const Series& slow);

/// Event at bar i iff bar i-1 closed down, bar i closed up, and bar i's body
/// strictly contains bar i-1's body. Wicks are ignored; key_level is bar i's
/// low.
std::vector<PatternEvent> detect_bullish_engulfing(const std::vector<market::DailyBar>& bars);

/// Sum of ddx_daily over the trailing `window` records.
double ddx_cumulative(const std::vector<market::CapitalFlowRecord>& flows, int window);

/// 100 * volume / float_shares.
double turnover_rate(double volume, double float_shares);

struct AmplitudeRange {
    double amplitude_pct = 0.0;  // 100 * (max high - min low) / reference close
    double range_pct = 0.0;      // 100 * (last close - reference close) / reference close
};

/// Over the last `n` bars, relative to the close immediately before them.
AmplitudeRange window_amplitude_range(const std::vector<market::DailyBar>& bars, int n);

}  // namespace finsphere::indicators
