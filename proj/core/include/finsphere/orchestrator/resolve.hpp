#pragma once

#include <string>
#include <vector>

#include "finsphere/market/types.hpp"

namespace finsphere::orchestrator {

/// Picks the instrument a free-text query refers to.
///
/// Matching is case-insensitive on whole-word occurrences of each
/// instrument's name, aliases, and ticker. Per instrument only its longest
/// matched span counts; across instruments the longest span wins, with ties
/// broken by lexicographic ticker order. Two distinct instruments matching
/// disjoint spans of the query (both genuinely named) raise AmbiguityError
/// listing the candidate tickers; zero matches raise NotFoundError.
market::Instrument resolve_instrument(const std::string& query,
                                      const std::vector<market::Instrument>& universe);

}  // namespace finsphere::orchestrator
