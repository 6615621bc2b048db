#include "finsphere/orchestrator/template_synthesizer.hpp"

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"

namespace finsphere::orchestrator {

namespace {

using analysis::Finding;
using analysis::Signal;
using analysis::ToolKind;
using analysis::ToolReport;

const ToolReport* section_of(const BackgroundDoc& bg, ToolKind kind) {
    for (const auto& section : bg.sections)
        if (section.kind == kind) return &section;
    return nullptr;
}

const Finding* finding_of(const BackgroundDoc& bg, ToolKind kind, std::string_view label) {
    const ToolReport* section = section_of(bg, kind);
    return section ? analysis::find_finding(section->findings, label) : nullptr;
}

std::string with_unit(const Finding& f) {
    std::string rendered = f.value_text();
    if (f.unit.empty()) return rendered;
    if (f.unit == "%") return rendered + "%";
    return rendered + " " + f.unit;
}

std::string short_term_conclusion(Signal signal) {
    switch (signal) {
        case Signal::bullish:
            return "Short-term signals are strengthening, warranting active attention "
                   "and further validation.";
        case Signal::bearish:
            return "Short-term signals are weakening; cautious observation and risk "
                   "awareness are advised.";
        case Signal::neutral:
            return "Short-term signals are mixed; continued tracking and patient "
                   "observation are advised.";
    }
    return {};
}

std::string medium_long_conclusion(Signal signal) {
    switch (signal) {
        case Signal::bullish:
            return "Medium to long-term fundamentals are strengthening, supporting "
                   "active attention and continued tracking over longer horizons.";
        case Signal::bearish:
            return "Medium to long-term fundamentals are weakening; caution and "
                   "continued risk monitoring are advised for extended horizons.";
        case Signal::neutral:
            return "Medium to long-term fundamentals are mixed; continued tracking and "
                   "patient observation are advised over longer horizons.";
    }
    return {};
}

/// The strongest technical reason backing its signal, without introducing
/// figures beyond the findings.
std::string technical_reason(const BackgroundDoc& bg, Signal signal) {
    const auto has = [&](std::string_view label) {
        return finding_of(bg, ToolKind::technical, label) != nullptr;
    };
    const auto text_is = [&](std::string_view label, std::string_view want) {
        const Finding* f = finding_of(bg, ToolKind::technical, label);
        return f && !f->is_numeric() && f->text_value() == want;
    };
    if (signal == Signal::bullish) {
        if (text_is(analysis::labels::kEngulfingStatus, "active")) {
            const Finding* level =
                finding_of(bg, ToolKind::technical, analysis::labels::kEngulfingKeyLevel);
            return "an active bullish engulfing pattern holding above its key level of " +
                   with_unit(*level);
        }
        if (has(analysis::labels::kRsiGoldenAge)) return "a fresh RSI golden cross";
        if (has(analysis::labels::kMacdGoldenAge)) return "a fresh MACD golden cross";
        return "improving momentum readings";
    }
    if (signal == Signal::bearish) {
        if (has(analysis::labels::kRsiDeathAge)) return "a fresh RSI death cross";
        if (has(analysis::labels::kMacdDeathAge)) return "a fresh MACD death cross";
        if (text_is(analysis::labels::kCloseVsMas, "below all"))
            return "a close below all moving averages in descending alignment";
        return "deteriorating momentum readings";
    }
    return "evenly balanced chart signals";
}

std::string fundamental_reason(const BackgroundDoc& bg, Signal signal) {
    const Finding* revenue =
        finding_of(bg, ToolKind::fundamental, analysis::labels::kRevenueYoy);
    const Finding* profit =
        finding_of(bg, ToolKind::fundamental, analysis::labels::kNetProfitYoy);
    if (signal == Signal::bearish) {
        if (revenue && profit && revenue->numeric() < 0 && profit->numeric() < 0)
            return "year-over-year declines across revenue and net profit";
        if (profit && profit->numeric() < 0) return "a year-over-year decline in net profit";
        return "softening earnings quality and solvency readings";
    }
    if (signal == Signal::bullish)
        return "year-over-year growth in revenue and net profit with improving solvency";
    return "evenly balanced earnings and solvency readings";
}

std::string movement_summary(const BackgroundDoc& bg) {
    const Finding* name = finding_of(bg, ToolKind::volume_price, analysis::labels::kInstrument);
    if (!name) name = finding_of(bg, ToolKind::technical, analysis::labels::kInstrument);
    const Finding* close =
        finding_of(bg, ToolKind::volume_price, analysis::labels::kLatestClose);
    if (!close) close = finding_of(bg, ToolKind::technical, analysis::labels::kLatestClose);
    const Finding* change =
        finding_of(bg, ToolKind::volume_price, analysis::labels::kDailyChange);
    const Finding* catalyst =
        finding_of(bg, ToolKind::news, analysis::labels::kNewsCatalyst);
    const Finding* rate =
        finding_of(bg, ToolKind::volume_price, analysis::labels::kTurnoverRate);

    std::string out = name ? name->text_value() : "The stock";
    if (change && close) {
        const double c = change->numeric();
        if (c > 0) out += " rose " + with_unit(*change) + " to " + with_unit(*close);
        else if (c < 0) out += " fell " + with_unit(*change) + " to " + with_unit(*close);
        else out += " held flat at " + with_unit(*close);
    } else if (close) {
        out += " stands at " + with_unit(*close);
    }
    if (catalyst)
        out += " as " + catalyst->text_value();
    else if (rate)
        out += " on turnover of " + with_unit(*rate);
    out += ".";
    return text::truncate_words(out, 20);
}

}  // namespace

Report synthesize_template(const BackgroundDoc& bg) {
    const ToolReport* technical = section_of(bg, ToolKind::technical);
    const ToolReport* fundamental = section_of(bg, ToolKind::fundamental);
    if (!technical || !fundamental)
        throw ValidationError(
            "synthesis requires technical and fundamental background sections");

    Report report;
    report.movement_summary = movement_summary(bg);
    report.short_term_conclusion = short_term_conclusion(technical->signal);
    report.medium_long_conclusion = medium_long_conclusion(fundamental->signal);
    for (const auto& section : bg.sections)
        report.detail_sections.emplace_back(section.kind, section.narrative);

    const auto restate = [](std::string conclusion, const std::string& reason) {
        if (!conclusion.empty() && conclusion.back() == '.') conclusion.pop_back();
        return conclusion + ", anchored by " + reason + ".";
    };
    report.final_summary =
        restate(report.short_term_conclusion, technical_reason(bg, technical->signal)) +
        " " +
        restate(report.medium_long_conclusion, fundamental_reason(bg, fundamental->signal));

    report.full_text = render_full_text(report);
    return report;
}

}  // namespace finsphere::orchestrator
