#pragma once

#include <string>
#include <vector>

#include "finsphere/orchestrator/background.hpp"
#include "finsphere/orchestrator/resources.hpp"

namespace finsphere::orchestrator {

/// Ordered prompt blocks sent to a text-generation backend.
struct PromptBlock {
    std::string title;
    std::string body;
};

struct PromptDocument {
    std::string system_instruction;
    std::vector<PromptBlock> blocks;

    /// Single user-message rendering: blocks in order, each under
    /// "## <title>".
    std::string render() const;
};

/// Assembles the synthesis prompt: background information, response
/// standards, writing guidelines, few-shot examples (block omitted when
/// empty), and the specific query.
PromptDocument build_prompt(const BackgroundDoc& bg,
                            const std::vector<FewShotExample>& fewshots,
                            const ResourceSet& resources = {});

}  // namespace finsphere::orchestrator
