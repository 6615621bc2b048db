#pragma once

#include <string>
#include <vector>

#include "finsphere/orchestrator/background.hpp"
#include "finsphere/orchestrator/prompt.hpp"
#include "finsphere/orchestrator/report.hpp"

namespace finsphere::orchestrator {

/// External chat-completion-style text-generation service.
struct BackendConfig {
    std::string endpoint;  // http://host:port/path
    std::string model_id;
    int max_output_tokens = 8000;
    double temperature = 0.5;
    /// JSON pointer locating the generated text in the response body.
    std::string response_pointer = "/choices/0/message/content";
    int max_retries = 2;       // transport-failure retries beyond the first try
    int timeout_seconds = 60;
};

/// Sends one prompt and returns the generated text.
///
/// Transport failures retry up to cfg.max_retries, then surface as a
/// retryable BackendError. HTTP 400 (request rejected, e.g. over the token
/// limit) raises ConfigError; other non-2xx statuses raise BackendError.
std::string complete_text(const PromptDocument& prompt, const BackendConfig& cfg);

/// build_prompt -> complete_text -> parse_report_text. Parse shortfalls are
/// recorded in Report::parse_warnings with full_text preserved verbatim.
Report synthesize_llm(const BackgroundDoc& bg, const BackendConfig& cfg,
                      const std::vector<FewShotExample>& fewshots,
                      const ResourceSet& resources = {});

}  // namespace finsphere::orchestrator
