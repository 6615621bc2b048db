#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "finsphere/analysis/findings.hpp"

namespace finsphere::analysis {

/// Assembles a tool narrative strictly from findings: every figure that
/// reaches the text goes through value()/value_with_unit(), so the citation
/// count and the no-unsourced-numbers guarantee hold by construction.
class NarrativeBuilder {
public:
    explicit NarrativeBuilder(const std::vector<Finding>& findings)
        : findings_(findings) {}

    bool has(std::string_view label) const;
    double numeric(std::string_view label) const;

    /// Rendered value of the finding; records the citation when numeric.
    std::string value(std::string_view label);
    /// Value followed by its unit ("4.48 yuan", "17.65%").
    std::string value_with_unit(std::string_view label);
    /// Integer finding rendered as an ordinal ("1st", "102nd"); cites it.
    std::string ordinal_value(std::string_view label);

    /// Appends one sentence (caller includes terminal punctuation).
    void add(std::string sentence);

    std::string str() const;
    /// Number of distinct numeric findings rendered so far.
    int citations() const { return static_cast<int>(cited_.size()); }

private:
    const Finding& require(std::string_view label) const;

    const std::vector<Finding>& findings_;
    std::vector<std::string> sentences_;
    std::set<std::string, std::less<>> cited_;
};

/// "1st", "2nd", "3rd", "4th", ..., "102nd".
std::string ordinal(int n);

/// "up" / "down" / "flat" for a signed change.
std::string_view direction_word(double change);

}  // namespace finsphere::analysis
