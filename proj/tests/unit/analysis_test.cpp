#include <gtest/gtest.h>

#include <set>

#include "finsphere/analysis/narrative.hpp"
#include "finsphere/analysis/signal_rules.hpp"
#include "finsphere/analysis/tools.hpp"
#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"
#include "finsphere/market/store.hpp"
#include "support/store_builder.hpp"

using namespace finsphere;
using namespace finsphere::analysis;

namespace {

const std::string kSampleStore = std::string(FINSPHERE_DATA_DIR) + "/sample_store";
constexpr const char* kTf = "601162";

market::MarketSnapshot tf_snapshot() {
    static const market::MarketSnapshot snap = [] {
        market::MarketStore store;
        store.load_directory(kSampleStore);
        return store.snapshot(kTf, Instant::parse("2024-10-16"));
    }();
    return snap;
}

std::vector<Finding> with(std::initializer_list<Finding> fs) { return fs; }

}  // namespace

TEST(FindingTest, ConstructionAndRendering) {
    const Finding n = Finding::number("latest close", 4.48, "yuan");
    EXPECT_TRUE(n.is_numeric());
    EXPECT_DOUBLE_EQ(n.numeric(), 4.48);
    EXPECT_EQ(n.value_text(), "4.48");
    EXPECT_EQ(n.unit, "yuan");

    const Finding t = Finding::text("bullish engulfing status", "active");
    EXPECT_FALSE(t.is_numeric());
    EXPECT_EQ(t.text_value(), "active");
    EXPECT_EQ(t.value_text(), "active");

    EXPECT_EQ(Finding::number("x", -14.865).value_text(), "-14.865");
}

TEST(FindingTest, FindByLabel) {
    const auto findings = with({Finding::number("a", 1), Finding::number("b", 2)});
    ASSERT_NE(find_finding(findings, "b"), nullptr);
    EXPECT_DOUBLE_EQ(find_finding(findings, "b")->numeric(), 2.0);
    EXPECT_EQ(find_finding(findings, "c"), nullptr);
}

TEST(FindingTest, EnumRoundTrips) {
    for (const auto* name :
         {"volume_price", "technical", "capital_flow", "fundamental", "news"})
        EXPECT_EQ(to_string(tool_kind_from(name)), name);
    EXPECT_THROW(tool_kind_from("sentiment"), ValidationError);

    for (const auto* name : {"bullish", "bearish", "neutral"})
        EXPECT_EQ(to_string(signal_from(name)), name);
    EXPECT_THROW(signal_from("sideways"), ValidationError);

    EXPECT_EQ(display_name(ToolKind::volume_price), "Volume and Price Analysis");
    EXPECT_EQ(display_name(ToolKind::capital_flow), "Capital Flow Analysis");
}

TEST(FindingTest, ToolReportJsonRoundTrip) {
    ToolReport report;
    report.kind = ToolKind::capital_flow;
    report.findings = {Finding::number("five-day cumulative DDX", -14.865),
                       Finding::text("margin flow direction", "inflow"),
                       Finding::number("turnover rate", 17.65, "%")};
    report.narrative = "The five-day cumulative DDX stands at -14.865.";
    report.signal = Signal::bearish;
    report.data_citations = 2;

    const std::string json = tool_report_to_json(report);
    EXPECT_EQ(tool_report_from_json(json), report);

    const std::string pretty = tool_report_to_json(report, 2);
    EXPECT_EQ(tool_report_from_json(pretty), report);
    EXPECT_NE(pretty.find('\n'), std::string::npos);

    EXPECT_THROW(tool_report_from_json("not json"), ParseError);
    EXPECT_THROW(tool_report_from_json("{}"), std::exception);
}

TEST(ControlLevelTest, Boundaries) {
    EXPECT_EQ(control_level(4.99), "low");
    EXPECT_EQ(control_level(0.0), "low");
    EXPECT_EQ(control_level(5.0), "moderate");
    EXPECT_EQ(control_level(10.0), "moderate");
    EXPECT_EQ(control_level(15.0), "moderate");
    EXPECT_EQ(control_level(15.01), "high");
    EXPECT_EQ(control_level(60.0), "high");
}

TEST(SignalRulesTest, TechnicalCrossRecency) {
    using labels::kMacdGoldenAge;
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::number(kMacdGoldenAge, 0)})),
              Signal::bullish);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::number(kMacdGoldenAge, 4)})),
              Signal::bullish);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::number(kMacdGoldenAge, 5)})),
              Signal::neutral);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::number(labels::kRsiGoldenAge, 1)})),
              Signal::bullish);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::number(labels::kMacdDeathAge, 2)})),
              Signal::bearish);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::number(labels::kMacdDeathAge, 7)})),
              Signal::neutral);
}

TEST(SignalRulesTest, TechnicalEngulfingAndOverboughtVeto) {
    using labels::kEngulfingStatus;
    using labels::kRsiOverbought;
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::text(kEngulfingStatus, "active")})),
              Signal::bullish);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::text(kEngulfingStatus, "invalidated")})),
              Signal::neutral);
    // An overbought oscillator vetoes the bullish read.
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::text(kEngulfingStatus, "active"),
                                    Finding::text(kRsiOverbought, "yes")})),
              Signal::neutral);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::text(kEngulfingStatus, "active"),
                                    Finding::text(kRsiOverbought, "no")})),
              Signal::bullish);
}

TEST(SignalRulesTest, TechnicalBullishWinsOverBearish) {
    const auto findings = with({Finding::number(labels::kMacdGoldenAge, 1),
                                Finding::number(labels::kRsiDeathAge, 1)});
    EXPECT_EQ(classify_signal(ToolKind::technical, findings), Signal::bullish);

    const auto stacked = with({Finding::text(labels::kCloseVsMas, "below all"),
                               Finding::text(labels::kMaAlignment, "descending")});
    EXPECT_EQ(classify_signal(ToolKind::technical, stacked), Signal::bearish);
    EXPECT_EQ(classify_signal(ToolKind::technical,
                              with({Finding::text(labels::kCloseVsMas, "below all"),
                                    Finding::text(labels::kMaAlignment, "mixed")})),
              Signal::neutral);
}

TEST(SignalRulesTest, FundamentalHitCounting) {
    using labels::kCurrentRatioTrend;
    using labels::kNetProfitYoy;
    using labels::kRevenueYoy;
    EXPECT_EQ(classify_signal(ToolKind::fundamental,
                              with({Finding::number(kRevenueYoy, 3.2),
                                    Finding::number(kNetProfitYoy, 8.1),
                                    Finding::text(kCurrentRatioTrend, "rising")})),
              Signal::bullish);
    // Two negative growth figures suffice for the bearish read.
    EXPECT_EQ(classify_signal(ToolKind::fundamental,
                              with({Finding::number(kRevenueYoy, -21.37),
                                    Finding::number(kNetProfitYoy, -62.38)})),
              Signal::bearish);
    EXPECT_EQ(classify_signal(ToolKind::fundamental,
                              with({Finding::number(kRevenueYoy, -21.37),
                                    Finding::text(kCurrentRatioTrend, "falling")})),
              Signal::bearish);
    // One hit alone stays neutral.
    EXPECT_EQ(classify_signal(ToolKind::fundamental,
                              with({Finding::number(kRevenueYoy, -21.37),
                                    Finding::number(kNetProfitYoy, 4.0)})),
              Signal::neutral);
    // Growth without the ratio confirmation stays neutral.
    EXPECT_EQ(classify_signal(ToolKind::fundamental,
                              with({Finding::number(kRevenueYoy, 3.2),
                                    Finding::number(kNetProfitYoy, 8.1)})),
              Signal::neutral);
    EXPECT_EQ(classify_signal(ToolKind::fundamental,
                              with({Finding::number(kRevenueYoy, 3.2),
                                    Finding::number(kNetProfitYoy, 8.1),
                                    Finding::text(kCurrentRatioTrend, "falling")})),
              Signal::neutral);
}

TEST(SignalRulesTest, CapitalFlowThresholdsAreStrict) {
    using labels::kDdx5;
    EXPECT_EQ(classify_signal(ToolKind::capital_flow,
                              with({Finding::number(kDdx5, 5.01)})),
              Signal::bullish);
    EXPECT_EQ(classify_signal(ToolKind::capital_flow, with({Finding::number(kDdx5, 5.0)})),
              Signal::neutral);
    EXPECT_EQ(classify_signal(ToolKind::capital_flow,
                              with({Finding::number(kDdx5, -5.0)})),
              Signal::neutral);
    EXPECT_EQ(classify_signal(ToolKind::capital_flow,
                              with({Finding::number(kDdx5, -5.01)})),
              Signal::bearish);
    EXPECT_EQ(classify_signal(ToolKind::capital_flow,
                              with({Finding::number(kDdx5, -14.865)})),
              Signal::bearish);
    EXPECT_EQ(classify_signal(ToolKind::capital_flow,
                              with({Finding::number(labels::kDdxDaily, -9.0)})),
              Signal::neutral);  // only the cumulative figure drives the call
}

TEST(SignalRulesTest, MoveMagnitudeThresholdsAreInclusive) {
    using labels::kDailyChange;
    for (const ToolKind kind : {ToolKind::volume_price, ToolKind::news}) {
        EXPECT_EQ(classify_signal(kind, with({Finding::number(kDailyChange, 9.5)})),
                  Signal::bullish);
        EXPECT_EQ(classify_signal(kind, with({Finding::number(kDailyChange, 9.49)})),
                  Signal::neutral);
        EXPECT_EQ(classify_signal(kind, with({Finding::number(kDailyChange, -9.5)})),
                  Signal::bearish);
        EXPECT_EQ(classify_signal(kind, with({Finding::number(kDailyChange, -9.49)})),
                  Signal::neutral);
        EXPECT_EQ(classify_signal(kind, {}), Signal::neutral);
    }
}

TEST(SignalRulesTest, EmptyFindingsAreNeutralForEveryKind) {
    for (const ToolKind kind : {ToolKind::volume_price, ToolKind::technical,
                                ToolKind::capital_flow, ToolKind::fundamental,
                                ToolKind::news})
        EXPECT_EQ(classify_signal(kind, {}), Signal::neutral);
}

TEST(NarrativeBuilderTest, CitesDistinctNumericFindingsOnce) {
    const auto findings = with({Finding::number("latest close", 4.48, "yuan"),
                                Finding::number("turnover rate", 17.65, "%"),
                                Finding::text("margin flow direction", "inflow")});
    NarrativeBuilder b(findings);
    b.add("Closed at " + b.value_with_unit("latest close") + ".");
    b.add("Closed again at " + b.value("latest close") + ".");  // repeat: still one
    EXPECT_EQ(b.citations(), 1);
    b.add("Turnover ran to " + b.value_with_unit("turnover rate") + ".");
    b.add("Flows point to " + b.value("margin flow direction") + ".");  // text: no cite
    EXPECT_EQ(b.citations(), 2);
    EXPECT_EQ(b.str(),
              "Closed at 4.48 yuan. Closed again at 4.48. Turnover ran to 17.65%. "
              "Flows point to inflow.");
    EXPECT_TRUE(b.has("latest close"));
    EXPECT_FALSE(b.has("absent"));
    EXPECT_DOUBLE_EQ(b.numeric("turnover rate"), 17.65);
    EXPECT_THROW(b.value("absent"), NotFoundError);
}

TEST(NarrativeBuilderTest, OrdinalValues) {
    NarrativeBuilder b(with({Finding::number("rank", 3)}));
    EXPECT_EQ(b.ordinal_value("rank"), "3rd");
    EXPECT_EQ(b.citations(), 1);

    EXPECT_EQ(ordinal(1), "1st");
    EXPECT_EQ(ordinal(2), "2nd");
    EXPECT_EQ(ordinal(3), "3rd");
    EXPECT_EQ(ordinal(4), "4th");
    EXPECT_EQ(ordinal(11), "11th");
    EXPECT_EQ(ordinal(12), "12th");
    EXPECT_EQ(ordinal(13), "13th");
    EXPECT_EQ(ordinal(21), "21st");
    EXPECT_EQ(ordinal(102), "102nd");
    EXPECT_EQ(ordinal(111), "111th");
}

TEST(NarrativeBuilderTest, DirectionWords) {
    EXPECT_EQ(direction_word(2.3), "up");
    EXPECT_EQ(direction_word(-0.1), "down");
    EXPECT_EQ(direction_word(0.0), "flat");
}

TEST(RunToolTest, MissingSectionsRaiseTypedErrors) {
    market::MarketSnapshot empty;
    empty.instrument.ticker = "000000";
    empty.instrument.name = "Hollow Shell";
    empty.as_of = Instant::parse("2024-10-16");
    for (const ToolKind kind : {ToolKind::volume_price, ToolKind::technical,
                                ToolKind::capital_flow, ToolKind::fundamental,
                                ToolKind::news}) {
        try {
            run_tool(kind, empty);
            FAIL() << "tool " << to_string(kind) << " ran on an empty snapshot";
        } catch (const DataUnavailableError& e) {
            EXPECT_EQ(e.kind(), to_string(kind));
        }
    }
}

TEST(RunToolTest, IsDeterministic) {
    const auto snap = tf_snapshot();
    for (const ToolKind kind : {ToolKind::volume_price, ToolKind::technical,
                                ToolKind::capital_flow, ToolKind::fundamental,
                                ToolKind::news}) {
        const ToolReport a = run_tool(kind, snap);
        const ToolReport b = run_tool(kind, snap);
        EXPECT_EQ(a, b) << to_string(kind);
        EXPECT_EQ(tool_report_to_json(a), tool_report_to_json(b));
    }
}

TEST(RunToolTest, LatestValuesFlowIntoFindings) {
    const auto snap = tf_snapshot();

    const auto vp = run_tool(ToolKind::volume_price, snap);
    ASSERT_NE(find_finding(vp.findings, labels::kLatestClose), nullptr);
    EXPECT_DOUBLE_EQ(find_finding(vp.findings, labels::kLatestClose)->numeric(), 4.48);
    ASSERT_NE(find_finding(vp.findings, labels::kTurnoverRate), nullptr);
    EXPECT_NEAR(find_finding(vp.findings, labels::kTurnoverRate)->numeric(), 17.65, 0.01);
    EXPECT_GE(vp.data_citations, 4);
    EXPECT_NE(vp.narrative.find("closed at 4.48 yuan"), std::string::npos);

    const auto tech = run_tool(ToolKind::technical, snap);
    const Finding* key = find_finding(tech.findings, labels::kEngulfingKeyLevel);
    ASSERT_NE(key, nullptr);
    EXPECT_DOUBLE_EQ(key->numeric(), 2.68);
    ASSERT_NE(find_finding(tech.findings, labels::kEngulfingDate), nullptr);
    EXPECT_EQ(find_finding(tech.findings, labels::kEngulfingDate)->text_value(),
              "2024-09-13");
    ASSERT_NE(find_finding(tech.findings, labels::kEngulfingStatus), nullptr);
    EXPECT_EQ(find_finding(tech.findings, labels::kEngulfingStatus)->text_value(),
              "active");  // close 4.48 holds above the 2.68 key level
    EXPECT_EQ(tech.signal, Signal::bullish);

    const auto flow = run_tool(ToolKind::capital_flow, snap);
    const Finding* ddx5 = find_finding(flow.findings, labels::kDdx5);
    ASSERT_NE(ddx5, nullptr);
    EXPECT_NEAR(ddx5->numeric(), -14.865, 1e-9);
    EXPECT_EQ(flow.signal, Signal::bearish);
    EXPECT_NE(flow.narrative.find("-14.865"), std::string::npos);

    const auto fund = run_tool(ToolKind::fundamental, snap);
    EXPECT_NEAR(find_finding(fund.findings, labels::kRevenueYoy)->numeric(), -21.37, 1e-9);
    EXPECT_NEAR(find_finding(fund.findings, labels::kNetProfitYoy)->numeric(), -62.38,
                1e-9);
    EXPECT_EQ(find_finding(fund.findings, labels::kCurrentRatioTrend)->text_value(),
              "falling");  // 1.74 after 1.92
    EXPECT_EQ(fund.signal, Signal::bearish);

    const auto news = run_tool(ToolKind::news, snap);
    ASSERT_NE(find_finding(news.findings, labels::kNewsCatalyst), nullptr);
    EXPECT_NE(find_finding(news.findings, labels::kNewsCatalyst)
                  ->text_value()
                  .find("integration roadmap"),
              std::string::npos);
}

TEST(RunToolTest, SignalsAgreeWithTheClassifier) {
    const auto snap = tf_snapshot();
    for (const ToolKind kind : {ToolKind::volume_price, ToolKind::technical,
                                ToolKind::capital_flow, ToolKind::fundamental,
                                ToolKind::news}) {
        const ToolReport r = run_tool(kind, snap);
        EXPECT_EQ(r.signal, classify_signal(kind, r.findings)) << to_string(kind);
    }
}

TEST(RunToolTest, NarrativesInventNoNumbers) {
    const auto snap = tf_snapshot();
    for (const ToolKind kind : {ToolKind::volume_price, ToolKind::technical,
                                ToolKind::capital_flow, ToolKind::fundamental,
                                ToolKind::news}) {
        const ToolReport r = run_tool(kind, snap);
        std::set<std::string> sourced;
        for (const auto& f : r.findings) sourced.insert(f.value_text());
        for (const auto& token : text::extract_numeric_tokens(r.narrative)) {
            std::string bare = token;
            if (!bare.empty() && bare.back() == '%') bare.pop_back();
            EXPECT_TRUE(sourced.count(bare) > 0)
                << to_string(kind) << " narrative cites unsourced figure '" << token
                << "'";
        }
        EXPECT_GT(r.data_citations, 0) << to_string(kind);
    }
}
