#pragma once

#include "finsphere/orchestrator/background.hpp"
#include "finsphere/orchestrator/report.hpp"

namespace finsphere::orchestrator {

/// Deterministic report synthesis: renders the four steps directly from the
/// background sections, so identical backgrounds yield byte-identical
/// reports and every figure traces back to a tool finding.
///
/// Requires technical and fundamental sections (the conclusion mapping reads
/// their signals); throws ValidationError otherwise.
Report synthesize_template(const BackgroundDoc& bg);

}  // namespace finsphere::orchestrator
