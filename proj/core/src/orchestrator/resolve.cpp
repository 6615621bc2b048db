#include "finsphere/orchestrator/resolve.hpp"

#include <algorithm>
#include <optional>

#include "finsphere/common/errors.hpp"
#include "finsphere/common/text.hpp"

namespace finsphere::orchestrator {

namespace {

struct Span {
    std::size_t begin = 0;
    std::size_t length = 0;

    std::size_t end() const { return begin + length; }
    bool overlaps(const Span& other) const {
        return begin < other.end() && other.begin < end();
    }
};

/// Longest whole-word occurrence of any of the instrument's identifiers.
std::optional<Span> best_span(const std::string& query, const market::Instrument& inst) {
    std::optional<Span> best;
    auto consider = [&](const std::string& needle) {
        if (needle.empty()) return;
        for (const auto& hit : text::find_phrase(query, needle)) {
            Span span{hit.position, needle.size()};
            if (!best || span.length > best->length) best = span;
        }
    };
    consider(inst.name);
    for (const auto& alias : inst.aliases) consider(alias);
    consider(inst.ticker);
    return best;
}

}  // namespace

market::Instrument resolve_instrument(const std::string& query,
                                      const std::vector<market::Instrument>& universe) {
    if (universe.empty()) throw ValidationError("instrument universe is empty");

    struct Match {
        const market::Instrument* inst;
        Span span;
    };
    std::vector<Match> matches;
    for (const auto& inst : universe)
        if (auto span = best_span(query, inst)) matches.push_back({&inst, *span});

    if (matches.empty())
        throw NotFoundError("query names no known instrument: " + query);

    std::sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
        if (a.span.length != b.span.length) return a.span.length > b.span.length;
        return a.inst->ticker < b.inst->ticker;
    });
    const Match& winner = matches.front();

    // A second instrument matched on a span the winner does not cover means
    // the query genuinely names two stocks.
    std::vector<std::string> disjoint;
    for (const auto& m : matches)
        if (m.inst != winner.inst && !m.span.overlaps(winner.span))
            disjoint.push_back(m.inst->ticker);
    if (!disjoint.empty()) {
        disjoint.insert(disjoint.begin(), winner.inst->ticker);
        throw AmbiguityError("query names multiple instruments: " + query,
                             std::move(disjoint));
    }
    return *winner.inst;
}

}  // namespace finsphere::orchestrator
