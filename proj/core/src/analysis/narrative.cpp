#include "finsphere/analysis/narrative.hpp"

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"

namespace finsphere::analysis {

const Finding& NarrativeBuilder::require(std::string_view label) const {
    const Finding* f = find_finding(findings_, label);
    if (!f) throw NotFoundError("no finding labelled '" + std::string(label) + "'");
    return *f;
}

bool NarrativeBuilder::has(std::string_view label) const {
    return find_finding(findings_, label) != nullptr;
}

double NarrativeBuilder::numeric(std::string_view label) const {
    return require(label).numeric();
}

std::string NarrativeBuilder::value(std::string_view label) {
    const Finding& f = require(label);
    if (f.is_numeric()) cited_.insert(f.label);
    return f.value_text();
}

std::string NarrativeBuilder::value_with_unit(std::string_view label) {
    const Finding& f = require(label);
    std::string rendered = value(label);
    if (f.unit.empty()) return rendered;
    if (f.unit == "%") return rendered + "%";
    return rendered + " " + f.unit;
}

std::string NarrativeBuilder::ordinal_value(std::string_view label) {
    const Finding& f = require(label);
    if (f.is_numeric()) cited_.insert(f.label);
    return ordinal(static_cast<int>(f.numeric()));
}

void NarrativeBuilder::add(std::string sentence) {
    sentences_.push_back(std::move(sentence));
}

std::string NarrativeBuilder::str() const {
    std::string out;
    for (const auto& s : sentences_) {
        if (!out.empty()) out.push_back(' ');
        out += s;
    }
    return out;
}

std::string ordinal(int n) {
    const int mod100 = n % 100;
    const int mod10 = n % 10;
    const char* suffix = "th";
    if (mod100 < 11 || mod100 > 13) {
        if (mod10 == 1) suffix = "st";
        else if (mod10 == 2) suffix = "nd";
        else if (mod10 == 3) suffix = "rd";
    }
    return std::to_string(n) + suffix;
}

std::string_view direction_word(double change) {
    if (change > 0) return "up";
    if (change < 0) return "down";
    return "flat";
}

}  // namespace finsphere::analysis
