#include "finsphere/orchestrator/backend_client.hpp"

#include <chrono>
#include <thread>

#include "finsphere/common/errors.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include <httplib.h>

namespace finsphere::orchestrator {

namespace {

struct Endpoint {
    std::string host;
    int port = 80;
    std::string path;
};

Endpoint parse_endpoint(const std::string& url) {
    if (url.rfind("https://", 0) == 0)
        throw ConfigError("https backend endpoints are not supported; use http");
    if (url.rfind("http://", 0) != 0)
        throw ConfigError("backend endpoint must start with http://: " + url);
    Endpoint ep;
    const std::string rest = url.substr(7);
    const auto slash = rest.find('/');
    const std::string authority = slash == std::string::npos ? rest : rest.substr(0, slash);
    ep.path = slash == std::string::npos ? "/" : rest.substr(slash);
    const auto colon = authority.find(':');
    if (colon == std::string::npos) {
        ep.host = authority;
    } else {
        ep.host = authority.substr(0, colon);
        try {
            ep.port = std::stoi(authority.substr(colon + 1));
        } catch (const std::exception&) {
            throw ConfigError("invalid port in backend endpoint: " + url);
        }
    }
    if (ep.host.empty()) throw ConfigError("backend endpoint has no host: " + url);
    return ep;
}

}  // namespace

std::string complete_text(const PromptDocument& prompt, const BackendConfig& cfg) {
    const Endpoint ep = parse_endpoint(cfg.endpoint);

    nlohmann::json payload;
    payload["model"] = cfg.model_id;
    payload["messages"] = nlohmann::json::array();
    if (!prompt.system_instruction.empty())
        payload["messages"].push_back(
            {{"role", "system"}, {"content", prompt.system_instruction}});
    payload["messages"].push_back({{"role", "user"}, {"content", prompt.render()}});
    payload["max_tokens"] = cfg.max_output_tokens;
    payload["temperature"] = cfg.temperature;
    const std::string body = payload.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(std::chrono::milliseconds(50 * attempt));
        httplib::Client client(ep.host, ep.port);
        client.set_connection_timeout(cfg.timeout_seconds, 0);
        client.set_read_timeout(cfg.timeout_seconds, 0);
        auto res = client.Post(ep.path, body, "application/json");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status == 400)
            throw ConfigError("backend rejected the request (status 400): " + res->body);
        if (res->status < 200 || res->status >= 300)
            throw BackendError("backend returned status " + std::to_string(res->status) +
                                   ": " + res->body,
                               res->status >= 500);
        nlohmann::json response;
        try {
            response = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw BackendError(std::string("backend response is not JSON: ") + e.what());
        }
        try {
            return response.at(nlohmann::json::json_pointer(cfg.response_pointer))
                .get<std::string>();
        } catch (const nlohmann::json::exception&) {
            throw BackendError("backend response lacks text at pointer '" +
                               cfg.response_pointer + "'");
        }
    }
    throw BackendError("backend unreachable after " +
                           std::to_string(cfg.max_retries + 1) + " attempts (" +
                           last_error + ")",
                       true);
}

Report synthesize_llm(const BackgroundDoc& bg, const BackendConfig& cfg,
                      const std::vector<FewShotExample>& fewshots,
                      const ResourceSet& resources) {
    const PromptDocument prompt = build_prompt(bg, fewshots, resources);
    const std::string generated = complete_text(prompt, cfg);
    return parse_report_text(generated);
}

}  // namespace finsphere::orchestrator
