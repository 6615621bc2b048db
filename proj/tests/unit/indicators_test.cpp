#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "finsphere/common/errors.hpp"
#include "finsphere/indicators/indicators.hpp"
#include "support/oracles.hpp"

using namespace finsphere;
using namespace finsphere::indicators;
using testsupport::close_rel;

namespace {

Series series_of(std::vector<double> v) { return Series(std::move(v)); }

market::DailyBar bar(double open, double high, double low, double close) {
    market::DailyBar b;
    b.date = Date::parse("2024-01-02");
    b.open = open;
    b.high = high;
    b.low = low;
    b.close = close;
    b.volume = 1000;
    b.turnover_value = close * 1000;
    return b;
}

std::vector<double> random_walk(std::mt19937& rng, std::size_t n) {
    std::normal_distribution<double> step(0.0, 0.8);
    std::vector<double> v{100.0};
    while (v.size() < n) v.push_back(std::max(1.0, v.back() + step(rng)));
    return v;
}

std::vector<market::DailyBar> random_bars(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> jitter(0.0, 1.5);
    const auto closes = random_walk(rng, n + 1);
    std::vector<market::DailyBar> bars;
    Date d = Date::parse("2024-01-02");
    for (std::size_t i = 1; i <= n; ++i) {
        market::DailyBar b;
        b.date = d;
        b.open = closes[i - 1];
        b.close = closes[i];
        b.high = std::max(b.open, b.close) + jitter(rng);
        b.low = std::max(0.5, std::min(b.open, b.close) - jitter(rng));
        b.volume = 1000 + 10 * static_cast<double>(i);
        bars.push_back(b);
        d = d.next_weekday();
    }
    return bars;
}

}  // namespace

TEST(MovingAverageTest, SimpleBasics) {
    const auto out = moving_average(series_of({1, 2, 3}), 3, MovingAverageKind::simple);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_DOUBLE_EQ(out[0], 2.0);

    const auto longer = moving_average(series_of({1, 2, 3, 4}), 2, MovingAverageKind::simple);
    ASSERT_EQ(longer.size(), 3u);
    EXPECT_DOUBLE_EQ(longer[0], 1.5);
    EXPECT_DOUBLE_EQ(longer[2], 3.5);

    EXPECT_TRUE(moving_average(Series(), 3, MovingAverageKind::simple).empty());
    EXPECT_THROW(moving_average(series_of({1, 2}), 3, MovingAverageKind::simple),
                 ValidationError);
    EXPECT_THROW(moving_average(series_of({1, 2}), 0, MovingAverageKind::simple),
                 ValidationError);
}

TEST(MovingAverageTest, SimpleKeepsDateAlignment) {
    const std::vector<Date> dates = {Date::parse("2024-01-02"), Date::parse("2024-01-03"),
                                     Date::parse("2024-01-04")};
    const auto out = moving_average(Series(dates, {1, 2, 3}), 2, MovingAverageKind::simple);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out.date_at(0), dates[1]);  // first full window ends on day 2
    EXPECT_EQ(out.date_at(1), dates[2]);
}

TEST(MovingAverageTest, ExponentialBasics) {
    const auto flat = moving_average(series_of({5, 5, 5, 5}), 3,
                                     MovingAverageKind::exponential);
    ASSERT_EQ(flat.size(), 4u);
    for (std::size_t i = 0; i < flat.size(); ++i) EXPECT_DOUBLE_EQ(flat[i], 5.0);

    const auto out = moving_average(series_of({1, 2, 3}), 2, MovingAverageKind::exponential);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_DOUBLE_EQ(out[0], 1.0);
    EXPECT_NEAR(out[1], 1.6667, 1e-4);
    EXPECT_NEAR(out[2], 2.5556, 1e-4);
}

TEST(MovingAverageTest, SeriesRejectsNonFinite) {
    EXPECT_THROW(series_of({1.0, std::nan("")}), ValidationError);
    EXPECT_THROW(series_of({1.0, INFINITY}), ValidationError);
}

TEST(RsiTest, MonotoneAndFlatSeries) {
    const auto up = rsi(series_of({1, 2, 3, 4, 5, 6, 7, 8}), 6);
    ASSERT_EQ(up.size(), 2u);
    EXPECT_DOUBLE_EQ(up[0], 100.0);
    EXPECT_DOUBLE_EQ(up[1], 100.0);

    const auto down = rsi(series_of({8, 7, 6, 5, 4, 3, 2, 1}), 6);
    EXPECT_DOUBLE_EQ(down[0], 0.0);
    EXPECT_DOUBLE_EQ(down.back(), 0.0);

    const auto flat = rsi(series_of(std::vector<double>(10, 3.0)), 6);
    for (std::size_t i = 0; i < flat.size(); ++i) EXPECT_DOUBLE_EQ(flat[i], 50.0);
}

TEST(RsiTest, AlternatingSeriesStaysNearMidline) {
    std::vector<double> v;
    for (int i = 0; i < 60; ++i) v.push_back(i % 2 == 0 ? 10.0 : 11.0);
    const auto out = rsi(series_of(v), 14);
    ASSERT_FALSE(out.empty());
    EXPECT_DOUBLE_EQ(out[0], 50.0);  // seed window sees equal gain and loss
    for (std::size_t i = 0; i < out.size(); ++i) {
        EXPECT_GT(out[i], 44.0);
        EXPECT_LT(out[i], 56.0);
    }
}

TEST(RsiTest, BoundsAndErrors) {
    std::mt19937 rng(7);
    const auto out = rsi(series_of(random_walk(rng, 80)), 14);
    EXPECT_EQ(out.size(), 80u - 14u);
    for (std::size_t i = 0; i < out.size(); ++i) {
        EXPECT_GE(out[i], 0.0);
        EXPECT_LE(out[i], 100.0);
    }
    EXPECT_THROW(rsi(series_of({1, 2, 3}), 6), ValidationError);
    EXPECT_THROW(rsi(series_of({1, 2, 3}), 0), ValidationError);
}

TEST(MacdTest, ConstantSeriesIsAllZero) {
    const auto r = macd(series_of(std::vector<double>(40, 7.5)));
    ASSERT_EQ(r.dif.size(), 40u);
    for (std::size_t i = 0; i < r.dif.size(); ++i) {
        EXPECT_DOUBLE_EQ(r.dif[i], 0.0);
        EXPECT_DOUBLE_EQ(r.dea[i], 0.0);
        EXPECT_DOUBLE_EQ(r.histogram[i], 0.0);
    }
}

TEST(MacdTest, RampTurnsPositive) {
    std::vector<double> v;
    for (int i = 0; i < 60; ++i) v.push_back(10.0 + 0.5 * i);
    const auto r = macd(series_of(v));
    // The faster average leads on a steady uptrend once warmed up.
    for (std::size_t i = 30; i < r.dif.size(); ++i) {
        EXPECT_GT(r.dif[i], 0.0);
        EXPECT_GT(r.histogram[i], -1e-9);
    }
}

TEST(MacdTest, VShapeYieldsOneGoldenCrossAfterTrough) {
    std::vector<double> v;
    for (int i = 0; i < 40; ++i) v.push_back(100.0 - i);       // decline
    for (int i = 0; i < 40; ++i) v.push_back(60.0 + 1.5 * i);  // recovery
    const auto r = macd(series_of(v));
    const auto events = crosses(r.dif, r.dea);
    std::size_t golden = 0;
    for (const auto& e : events)
        if (e.direction == CrossDirection::golden && e.index >= 40) ++golden;
    EXPECT_EQ(golden, 1u);
}

TEST(MacdTest, RejectsBadPeriods) {
    const auto s = series_of(std::vector<double>(40, 1.0));
    EXPECT_THROW(macd(s, 26, 12, 9), ValidationError);
    EXPECT_THROW(macd(s, 12, 12, 9), ValidationError);
    EXPECT_THROW(macd(s, 0, 26, 9), ValidationError);
    EXPECT_THROW(macd(series_of({1, 2, 3}), 12, 26, 9), ValidationError);
}

TEST(CrossTest, DefinitionExamples) {
    const auto golden = crosses(series_of({0, 2}), series_of({1, 1}));
    ASSERT_EQ(golden.size(), 1u);
    EXPECT_EQ(golden[0].index, 1u);
    EXPECT_EQ(golden[0].direction, CrossDirection::golden);

    const auto death = crosses(series_of({2, 0}), series_of({1, 1}));
    ASSERT_EQ(death.size(), 1u);
    EXPECT_EQ(death[0].direction, CrossDirection::death);

    EXPECT_TRUE(crosses(series_of({1, 2, 3}), series_of({1, 2, 3})).empty());
    EXPECT_TRUE(crosses(series_of({2, 3, 4}), series_of({1, 1, 1})).empty());
}

TEST(CrossTest, TouchThenSeparateRegistersAtSeparation) {
    const auto events = crosses(series_of({0, 1, 2}), series_of({1, 1, 1}));
    ASSERT_EQ(events.size(), 1u);
    EXPECT_EQ(events[0].index, 2u);
    EXPECT_EQ(events[0].direction, CrossDirection::golden);

    // Touch and retreat is not a cross.
    EXPECT_TRUE(crosses(series_of({0, 1, 0}), series_of({1, 1, 1})).empty());
}

TEST(CrossTest, CarriesDatesAndRejectsMismatch) {
    const std::vector<Date> dates = {Date::parse("2024-05-06"), Date::parse("2024-05-07")};
    const auto events = crosses(Series(dates, {0, 2}), Series(dates, {1, 1}));
    ASSERT_EQ(events.size(), 1u);
    EXPECT_EQ(events[0].date, dates[1]);
    EXPECT_THROW(crosses(series_of({1, 2}), series_of({1})), ValidationError);
}

TEST(EngulfingTest, DefinitionExample) {
    const std::vector<market::DailyBar> bars = {bar(3.0, 3.2, 1.9, 2.0),
                                                bar(1.9, 3.3, 1.8, 3.1)};
    const auto events = detect_bullish_engulfing(bars);
    ASSERT_EQ(events.size(), 1u);
    EXPECT_DOUBLE_EQ(events[0].key_level, 1.8);
    EXPECT_EQ(events[0].kind, PatternKind::bullish_engulfing);
}

TEST(EngulfingTest, RequiresStrictBodyContainment) {
    // Two up bars: no reversal.
    EXPECT_TRUE(detect_bullish_engulfing({bar(1, 2, 1, 2), bar(2, 3, 2, 3)}).empty());
    // Boundary equality on either side of the body fails the strict test.
    EXPECT_TRUE(detect_bullish_engulfing({bar(3, 3, 2, 2), bar(2.0, 3.5, 1.9, 3.4)}).empty());
    EXPECT_TRUE(detect_bullish_engulfing({bar(3, 3, 2, 2), bar(1.9, 3.1, 1.8, 3.0)}).empty());
    // Strictly containing both ends succeeds.
    EXPECT_EQ(detect_bullish_engulfing({bar(3, 3, 2, 2), bar(1.9, 3.2, 1.7, 3.1)}).size(),
              1u);
    EXPECT_THROW(detect_bullish_engulfing({bar(1, 2, 1, 2)}), ValidationError);
}

TEST(DdxTest, TrailingWindowSum) {
    std::vector<market::CapitalFlowRecord> flows(5);
    for (int i = 0; i < 5; ++i) flows[i].ddx_daily = i + 1;
    EXPECT_DOUBLE_EQ(ddx_cumulative(flows, 5), 15.0);
    EXPECT_DOUBLE_EQ(ddx_cumulative(flows, 2), 9.0);  // last two records only

    std::vector<market::CapitalFlowRecord> zeros(6);
    EXPECT_DOUBLE_EQ(ddx_cumulative(zeros, 5), 0.0);

    EXPECT_THROW(ddx_cumulative(flows, 6), ValidationError);
    EXPECT_THROW(ddx_cumulative(flows, 0), ValidationError);
}

TEST(TurnoverTest, Definition) {
    EXPECT_DOUBLE_EQ(turnover_rate(1000, 1000), 100.0);
    EXPECT_DOUBLE_EQ(turnover_rate(0, 1000), 0.0);
    EXPECT_NEAR(turnover_rate(152947000, 866554000), 17.65, 0.01);
    EXPECT_THROW(turnover_rate(1000, 0), ValidationError);
    EXPECT_THROW(turnover_rate(-1, 1000), ValidationError);
}

TEST(AmplitudeTest, Definition) {
    std::vector<market::DailyBar> flat(4, bar(10, 10, 10, 10));
    const auto zero = window_amplitude_range(flat, 3);
    EXPECT_DOUBLE_EQ(zero.amplitude_pct, 0.0);
    EXPECT_DOUBLE_EQ(zero.range_pct, 0.0);

    const std::vector<market::DailyBar> bars = {bar(10, 10.2, 9.8, 10.0),
                                                bar(10.0, 12.0, 9.5, 10.5),
                                                bar(10.5, 11.5, 9.0, 11.0)};
    const auto r = window_amplitude_range(bars, 2);
    EXPECT_DOUBLE_EQ(r.amplitude_pct, 30.0);  // (12 - 9) / 10
    EXPECT_DOUBLE_EQ(r.range_pct, 10.0);      // (11 - 10) / 10

    const std::vector<market::DailyBar> down = {bar(10, 10, 10, 10),
                                                bar(10, 10, 8.9, 9.0)};
    EXPECT_LT(window_amplitude_range(down, 1).range_pct, 0.0);

    EXPECT_THROW(window_amplitude_range(bars, 3), ValidationError);
    EXPECT_THROW(window_amplitude_range(bars, 0), ValidationError);
}

TEST(OracleTest, SimpleMovingAverageMatchesBruteForce) {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> len(5, 150);
    std::uniform_int_distribution<int> window(1, 30);
    for (int run = 0; run < 50; ++run) {
        const auto v = random_walk(rng, static_cast<std::size_t>(len(rng)));
        const int w = std::min<int>(window(rng), static_cast<int>(v.size()));
        const auto got = moving_average(series_of(v), w, MovingAverageKind::simple);
        const auto want = testsupport::brute_sma(v, w);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < want.size(); ++i)
            EXPECT_TRUE(close_rel(got[i], want[i], 1e-12))
                << "run " << run << " idx " << i << ": " << got[i] << " vs " << want[i];
    }
}

TEST(OracleTest, ExponentialMovingAverageMatchesBruteForce) {
    std::mt19937 rng(202);
    std::uniform_int_distribution<int> len(2, 150);
    std::uniform_int_distribution<int> window(1, 30);
    for (int run = 0; run < 50; ++run) {
        const auto v = random_walk(rng, static_cast<std::size_t>(len(rng)));
        const int w = window(rng);
        const auto got = moving_average(series_of(v), w, MovingAverageKind::exponential);
        const auto want = testsupport::brute_ema(v, w);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < want.size(); ++i)
            EXPECT_TRUE(close_rel(got[i], want[i], 1e-9))
                << "run " << run << " idx " << i << ": " << got[i] << " vs " << want[i];
    }
}

TEST(OracleTest, RsiMatchesFromScratchRecomputation) {
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> len(20, 120);
    std::uniform_int_distribution<int> period(2, 14);
    for (int run = 0; run < 50; ++run) {
        auto v = random_walk(rng, static_cast<std::size_t>(len(rng)));
        if (run % 3 == 0) {
            // Quantize so flat stretches (zero deltas) occur.
            for (auto& x : v) x = std::round(x);
        }
        const int p = period(rng);
        const auto got = rsi(series_of(v), p);
        const auto want = testsupport::brute_rsi(v, p);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < want.size(); ++i)
            EXPECT_TRUE(close_rel(got[i], want[i], 1e-9))
                << "run " << run << " idx " << i << ": " << got[i] << " vs " << want[i];
    }
}

TEST(OracleTest, CrossEventsMatchBruteForceExactly) {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> len(2, 80);
    std::uniform_int_distribution<int> quant(1, 4);
    std::uniform_real_distribution<double> x(-2.0, 2.0);
    for (int run = 0; run < 200; ++run) {
        const std::size_t n = static_cast<std::size_t>(len(rng));
        const double q = quant(rng);
        std::vector<double> fast(n), slow(n);
        for (std::size_t i = 0; i < n; ++i) {
            // Coarse quantization makes touching values common.
            fast[i] = std::round(x(rng) * q) / q;
            slow[i] = std::round(x(rng) * q) / q;
        }
        const auto got = crosses(series_of(fast), series_of(slow));
        const auto want = testsupport::brute_crosses(fast, slow);
        ASSERT_EQ(got.size(), want.size()) << "run " << run;
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_EQ(got[i].index, want[i].index) << "run " << run;
            EXPECT_EQ(got[i].direction, want[i].direction) << "run " << run;
        }
    }
}

TEST(OracleTest, EngulfingEventsMatchBruteForceExactly) {
    std::mt19937 rng(505);
    std::uniform_int_distribution<int> len(2, 60);
    for (int run = 0; run < 200; ++run) {
        const auto bars = random_bars(rng, static_cast<std::size_t>(len(rng)));
        const auto got = detect_bullish_engulfing(bars);
        const auto want = testsupport::brute_engulfing(bars);
        ASSERT_EQ(got.size(), want.size()) << "run " << run;
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_EQ(got[i].date, bars[want[i].index].date) << "run " << run;
            EXPECT_DOUBLE_EQ(got[i].key_level, want[i].key_level) << "run " << run;
        }
    }
}

TEST(OracleTest, DdxMatchesTrailingSum) {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_real_distribution<double> x(-8.0, 8.0);
    for (int run = 0; run < 100; ++run) {
        const int n = len(rng);
        std::vector<market::CapitalFlowRecord> flows(static_cast<std::size_t>(n));
        std::vector<double> dailies;
        for (auto& f : flows) {
            f.ddx_daily = x(rng);
            dailies.push_back(f.ddx_daily);
        }
        std::uniform_int_distribution<int> window(1, n);
        const int w = window(rng);
        EXPECT_TRUE(close_rel(ddx_cumulative(flows, w),
                              testsupport::brute_trailing_sum(dailies, w), 1e-12));
    }
}

TEST(OracleTest, MacdHistogramSignChangeMatchesCrossEvents) {
    std::mt19937 rng(707);
    std::uniform_int_distribution<int> len(30, 150);
    for (int run = 0; run < 50; ++run) {
        const auto v = random_walk(rng, static_cast<std::size_t>(len(rng)));
        const auto r = macd(series_of(v));
        const auto events = crosses(r.dif, r.dea);
        std::vector<testsupport::BruteCross> from_hist;
        for (std::size_t i = 1; i < r.histogram.size(); ++i) {
            if (r.histogram[i - 1] <= 0.0 && r.histogram[i] > 0.0)
                from_hist.push_back({i, CrossDirection::golden});
            else if (r.histogram[i - 1] >= 0.0 && r.histogram[i] < 0.0)
                from_hist.push_back({i, CrossDirection::death});
        }
        ASSERT_EQ(events.size(), from_hist.size()) << "run " << run;
        for (std::size_t i = 0; i < events.size(); ++i) {
            EXPECT_EQ(events[i].index, from_hist[i].index) << "run " << run;
            EXPECT_EQ(events[i].direction, from_hist[i].direction) << "run " << run;
        }
    }
}

TEST(OracleTest, AmplitudeRangeMatchesDirectRecomputation) {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> len(2, 70);
    for (int run = 0; run < 100; ++run) {
        const auto bars = random_bars(rng, static_cast<std::size_t>(len(rng)));
        std::uniform_int_distribution<int> pick(1, static_cast<int>(bars.size()) - 1);
        const int n = pick(rng);
        const auto got = window_amplitude_range(bars, n);
        const std::size_t start = bars.size() - static_cast<std::size_t>(n);
        const double ref = bars[start - 1].close;
        double hi = bars[start].high, lo = bars[start].low;
        for (std::size_t i = start; i < bars.size(); ++i) {
            hi = std::max(hi, bars[i].high);
            lo = std::min(lo, bars[i].low);
        }
        EXPECT_TRUE(close_rel(got.amplitude_pct, 100.0 * (hi - lo) / ref, 1e-12));
        EXPECT_TRUE(close_rel(got.range_pct, 100.0 * (bars.back().close - ref) / ref, 1e-12));
        EXPECT_GE(got.amplitude_pct, 0.0);
    }
}
