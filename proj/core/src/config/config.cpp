#include "finsphere/config/config.hpp"

#include <cstdlib>

#include "finsphere/common/errors.hpp"
#include "finsphere/common/toml.hpp"

namespace finsphere::config {

SynthesizerMode synthesizer_mode_from(const std::string& name) {
    if (name == "template") return SynthesizerMode::template_text;
    if (name == "llm") return SynthesizerMode::llm;
    throw ConfigError("unknown synthesizer mode '" + name + "' (expected template|llm)");
}

std::string to_string(SynthesizerMode mode) {
    return mode == SynthesizerMode::llm ? "llm" : "template";
}

void RunConfig::validate() const {
    if (synthesizer == SynthesizerMode::llm) {
        if (!backend) throw ConfigError("llm synthesizer requires a [backend] section");
        if (backend->endpoint.empty())
            throw ConfigError("backend endpoint must not be empty");
    }
    if (backend) {
        if (backend->max_output_tokens <= 0)
            throw ConfigError("backend max_output_tokens must be positive");
        if (backend->temperature < 0)
            throw ConfigError("backend temperature must be non-negative");
    }
}

RunConfig load_config(const std::string& path) {
    const auto doc = toml::Document::parse_file(path);
    RunConfig cfg;
    if (auto v = doc.get_string("store", "dir")) cfg.store_dir = *v;
    if (auto v = doc.get_string("output", "dir")) cfg.output_dir = *v;
    if (auto v = doc.get_string("synthesizer", "mode"))
        cfg.synthesizer = synthesizer_mode_from(*v);
    if (auto v = doc.get_bool("synthesizer", "plan_narrowing")) cfg.plan_narrowing = *v;
    if (auto v = doc.get_string("synthesizer", "resource_dir")) cfg.resource_dir = *v;

    if (doc.get_string("backend", "endpoint")) {
        orchestrator::BackendConfig backend;
        backend.endpoint = *doc.get_string("backend", "endpoint");
        if (auto v = doc.get_string("backend", "model_id")) backend.model_id = *v;
        if (auto v = doc.get_int("backend", "max_output_tokens"))
            backend.max_output_tokens = static_cast<int>(*v);
        if (auto v = doc.get_double("backend", "temperature")) backend.temperature = *v;
        if (auto v = doc.get_string("backend", "response_pointer"))
            backend.response_pointer = *v;
        if (auto v = doc.get_int("backend", "max_retries"))
            backend.max_retries = static_cast<int>(*v);
        if (auto v = doc.get_int("backend", "timeout_seconds"))
            backend.timeout_seconds = static_cast<int>(*v);
        cfg.backend = std::move(backend);
    }

    cfg = apply_env_overrides(std::move(cfg));
    cfg.validate();
    return cfg;
}

namespace {

std::optional<std::string> env(const char* name) {
    const char* value = std::getenv(name);
    if (!value || !*value) return std::nullopt;
    return std::string(value);
}

bool parse_flag(const std::string& value, const char* name) {
    if (value == "1" || value == "true" || value == "yes") return true;
    if (value == "0" || value == "false" || value == "no") return false;
    throw ConfigError(std::string(name) + " must be a boolean flag, got '" + value + "'");
}

}  // namespace

RunConfig apply_env_overrides(RunConfig cfg) {
    if (auto v = env("FINSPHERE_STORE_DIR")) cfg.store_dir = *v;
    if (auto v = env("FINSPHERE_OUTPUT_DIR")) cfg.output_dir = *v;
    if (auto v = env("FINSPHERE_RESOURCE_DIR")) cfg.resource_dir = *v;
    if (auto v = env("FINSPHERE_SYNTHESIZER")) cfg.synthesizer = synthesizer_mode_from(*v);
    if (auto v = env("FINSPHERE_PLAN_NARROWING"))
        cfg.plan_narrowing = parse_flag(*v, "FINSPHERE_PLAN_NARROWING");

    const bool backend_touched = env("FINSPHERE_BACKEND_ENDPOINT") ||
                                 env("FINSPHERE_BACKEND_MODEL") ||
                                 env("FINSPHERE_BACKEND_MAX_TOKENS") ||
                                 env("FINSPHERE_BACKEND_TEMPERATURE");
    if (backend_touched && !cfg.backend) cfg.backend.emplace();
    if (cfg.backend) {
        if (auto v = env("FINSPHERE_BACKEND_ENDPOINT")) cfg.backend->endpoint = *v;
        if (auto v = env("FINSPHERE_BACKEND_MODEL")) cfg.backend->model_id = *v;
        if (auto v = env("FINSPHERE_BACKEND_MAX_TOKENS")) {
            try {
                cfg.backend->max_output_tokens = std::stoi(*v);
            } catch (const std::exception&) {
                throw ConfigError("FINSPHERE_BACKEND_MAX_TOKENS must be an integer");
            }
        }
        if (auto v = env("FINSPHERE_BACKEND_TEMPERATURE")) {
            try {
                cfg.backend->temperature = std::stod(*v);
            } catch (const std::exception&) {
                throw ConfigError("FINSPHERE_BACKEND_TEMPERATURE must be a number");
            }
        }
    }
    return cfg;
}

}  // namespace finsphere::config
