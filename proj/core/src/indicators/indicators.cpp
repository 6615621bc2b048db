#include "finsphere/indicators/indicators.hpp"

#include <algorithm>
#include <numeric>

#include "finsphere/common/errors.hpp"

namespace finsphere::indicators {

namespace {

std::vector<Date> tail_dates(const Series& s, std::size_t start) {
    if (!s.has_dates()) return {};
    return {s.dates().begin() + static_cast<std::ptrdiff_t>(start), s.dates().end()};
}

std::vector<double> ema_values(const std::vector<double>& v, int window) {
    std::vector<double> out;
    out.reserve(v.size());
    if (v.empty()) return out;
    const double alpha = 2.0 / (window + 1.0);
    double e = v.front();
    out.push_back(e);
    for (std::size_t i = 1; i < v.size(); ++i) {
        e = (v[i] - e) * alpha + e;
        out.push_back(e);
    }
    return out;
}

}  // namespace

Series moving_average(const Series& s, int window, MovingAverageKind kind) {
    if (window < 1) throw ValidationError("moving_average: window must be >= 1");
    if (s.empty()) return Series();
    if (kind == MovingAverageKind::exponential)
        return Series(s.dates(), ema_values(s.values(), window));

    const std::size_t n = s.size();
    const std::size_t w = static_cast<std::size_t>(window);
    if (w > n)
        throw ValidationError("moving_average: window " + std::to_string(window) +
                              " exceeds series length " + std::to_string(n));
    std::vector<double> out;
    out.reserve(n - w + 1);
    double sum = std::accumulate(s.values().begin(),
                                 s.values().begin() + static_cast<std::ptrdiff_t>(w), 0.0);
    out.push_back(sum / static_cast<double>(w));
    for (std::size_t i = w; i < n; ++i) {
        sum += s[i] - s[i - w];
        out.push_back(sum / static_cast<double>(w));
    }
    return Series(tail_dates(s, w - 1), std::move(out));
}

Series rsi(const Series& closes, int period) {
    if (period < 1) throw ValidationError("rsi: period must be >= 1");
    const std::size_t p = static_cast<std::size_t>(period);
    if (closes.size() < p + 1)
        throw ValidationError("rsi: need at least period+1 closes, have " +
                              std::to_string(closes.size()));
    const auto& v = closes.values();
    std::vector<double> out;
    out.reserve(closes.size() - p);

    double avg_gain = 0.0;
    double avg_loss = 0.0;
    for (std::size_t i = 1; i <= p; ++i) {
        const double d = v[i] - v[i - 1];
        if (d > 0) avg_gain += d;
        else avg_loss -= d;
    }
    avg_gain /= static_cast<double>(p);
    avg_loss /= static_cast<double>(p);

    auto value_of = [](double gain, double loss) {
        if (loss == 0.0 && gain == 0.0) return 50.0;  // flat window
        if (loss == 0.0) return 100.0;
        if (gain == 0.0) return 0.0;
        return 100.0 - 100.0 / (1.0 + gain / loss);
    };
    out.push_back(value_of(avg_gain, avg_loss));
    for (std::size_t i = p + 1; i < v.size(); ++i) {
        const double d = v[i] - v[i - 1];
        const double gain = d > 0 ? d : 0.0;
        const double loss = d < 0 ? -d : 0.0;
        // Wilder smoothing.
        avg_gain = (avg_gain * (p - 1) + gain) / static_cast<double>(p);
        avg_loss = (avg_loss * (p - 1) + loss) / static_cast<double>(p);
        out.push_back(value_of(avg_gain, avg_loss));
    }
    return Series(tail_dates(closes, p), std::move(out));
}

MacdResult macd(const Series& closes, int fast, int slow, int signal) {
    if (fast >= slow) throw ValidationError("macd: fast period must be less than slow");
    if (fast < 1 || signal < 1) throw ValidationError("macd: periods must be >= 1");
    if (closes.size() < static_cast<std::size_t>(slow))
        throw ValidationError("macd: need at least `slow` closes, have " +
                              std::to_string(closes.size()));
    const auto fast_ema = ema_values(closes.values(), fast);
    const auto slow_ema = ema_values(closes.values(), slow);
    std::vector<double> dif(closes.size());
    for (std::size_t i = 0; i < closes.size(); ++i) dif[i] = fast_ema[i] - slow_ema[i];
    auto dea = ema_values(dif, signal);
    std::vector<double> hist(closes.size());
    for (std::size_t i = 0; i < closes.size(); ++i) hist[i] = dif[i] - dea[i];
    return {Series(closes.dates(), std::move(dif)), Series(closes.dates(), std::move(dea)),
            Series(closes.dates(), std::move(hist))};
}

std::vector<CrossEvent> crosses(const Series& fast, const Series& slow) {
    if (fast.size() != slow.size())
        throw ValidationError("crosses: series length mismatch (" +
                              std::to_string(fast.size()) + " vs " +
                              std::to_string(slow.size()) + ")");
    std::vector<CrossEvent> events;
    for (std::size_t i = 1; i < fast.size(); ++i) {
        const bool was_at_or_below = fast[i - 1] <= slow[i - 1];
        const bool was_at_or_above = fast[i - 1] >= slow[i - 1];
        if (was_at_or_below && fast[i] > slow[i])
            events.push_back({i, fast.date_at(i), CrossDirection::golden});
        else if (was_at_or_above && fast[i] < slow[i])
            events.push_back({i, fast.date_at(i), CrossDirection::death});
    }
    return events;
}

std::vector<PatternEvent> detect_bullish_engulfing(
    const std::vector<market::DailyBar>& bars) {
    if (bars.size() < 2)
        throw ValidationError("detect_bullish_engulfing: need at least 2 bars");
    std::vector<PatternEvent> events;
    for (std::size_t i = 1; i < bars.size(); ++i) {
        const auto& prev = bars[i - 1];
        const auto& cur = bars[i];
        const bool prev_down = prev.close < prev.open;
        const bool cur_up = cur.close > cur.open;
        const bool engulfs = cur.open < prev.close && cur.close > prev.open;
        if (prev_down && cur_up && engulfs)
            events.push_back({cur.date, PatternKind::bullish_engulfing, cur.low});
    }
    return events;
}

double ddx_cumulative(const std::vector<market::CapitalFlowRecord>& flows, int window) {
    if (window < 1) throw ValidationError("ddx_cumulative: window must be >= 1");
    if (flows.size() < static_cast<std::size_t>(window))
        throw ValidationError("ddx_cumulative: need " + std::to_string(window) +
                              " records, have " + std::to_string(flows.size()));
    double sum = 0.0;
    for (std::size_t i = flows.size() - static_cast<std::size_t>(window); i < flows.size();
         ++i)
        sum += flows[i].ddx_daily;
    return sum;
}

double turnover_rate(double volume, double float_shares) {
    if (float_shares <= 0) throw ValidationError("turnover_rate: float_shares must be > 0");
    if (volume < 0) throw ValidationError("turnover_rate: volume must be >= 0");
    return 100.0 * volume / float_shares;
}

AmplitudeRange window_amplitude_range(const std::vector<market::DailyBar>& bars, int n) {
    if (n < 1) throw ValidationError("window_amplitude_range: n must be >= 1");
    if (bars.size() < static_cast<std::size_t>(n) + 1)
        throw ValidationError("window_amplitude_range: need " + std::to_string(n + 1) +
                              " bars, have " + std::to_string(bars.size()));
    const std::size_t start = bars.size() - static_cast<std::size_t>(n);
    const double ref_close = bars[start - 1].close;
    double max_high = bars[start].high;
    double min_low = bars[start].low;
    for (std::size_t i = start; i < bars.size(); ++i) {
        max_high = std::max(max_high, bars[i].high);
        min_low = std::min(min_low, bars[i].low);
    }
    return {100.0 * (max_high - min_low) / ref_close,
            100.0 * (bars.back().close - ref_close) / ref_close};
}

}  // namespace finsphere::indicators
