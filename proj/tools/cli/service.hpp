#pragma once

#include <memory>
#include <string>

#include "finsphere/orchestrator/engine.hpp"

namespace finsphere::cli {

/// HTTP front end over one Engine. Endpoints:
///   POST /v1/analyze  {"query": "...", "as_of": "..."} -> analyze response
///   POST /v1/score    {"report": {...}, "mode": "...", "judge": {...}} -> rubric
///   GET  /v1/health   -> store stats
/// JSON in and out; wrong content type -> 415, validation failures -> 422,
/// backend failures -> 502.
class Service {
public:
    explicit Service(std::shared_ptr<const orchestrator::Engine> engine);
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds and serves on a background thread; pass port 0 for an ephemeral
    /// port. Returns the bound port, or 0 when binding failed.
    int start(const std::string& host, int port);

    /// Serves on the calling thread until stopped; false when binding failed.
    bool run(const std::string& host, int port);

    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace finsphere::cli
