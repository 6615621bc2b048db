#pragma once

#include <optional>
#include <string>

#include "finsphere/orchestrator/backend_client.hpp"

namespace finsphere::config {

enum class SynthesizerMode { template_text, llm };

SynthesizerMode synthesizer_mode_from(const std::string& name);
std::string to_string(SynthesizerMode mode);

/// Run-wide settings shared by the CLI and the service.
struct RunConfig {
    std::string store_dir;
    std::optional<orchestrator::BackendConfig> backend;
    SynthesizerMode synthesizer = SynthesizerMode::template_text;
    bool plan_narrowing = false;
    std::string output_dir = "out";
    /// Optional directory whose files override embedded resources.
    std::string resource_dir;

    /// Throws ConfigError on inconsistency (llm mode without a backend).
    void validate() const;
};

/// Parses the TOML config file (sections [store], [backend], [synthesizer],
/// [output]) and applies FINSPHERE_* environment overrides.
RunConfig load_config(const std::string& path);

/// Environment overrides only, on top of `base`. Recognized variables:
/// FINSPHERE_STORE_DIR, FINSPHERE_OUTPUT_DIR, FINSPHERE_SYNTHESIZER,
/// FINSPHERE_PLAN_NARROWING, FINSPHERE_RESOURCE_DIR,
/// FINSPHERE_BACKEND_ENDPOINT, FINSPHERE_BACKEND_MODEL,
/// FINSPHERE_BACKEND_MAX_TOKENS, FINSPHERE_BACKEND_TEMPERATURE.
RunConfig apply_env_overrides(RunConfig base);

}  // namespace finsphere::config
