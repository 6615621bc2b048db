#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace finsphere {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data. Carries a 1-based line number when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Input violates a domain invariant or an enumerated value set.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Requested entity does not exist.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// The store holds no records at or before the requested instant.
class EmptyHistoryError : public Error {
public:
    using Error::Error;
};

/// A query names more than one distinct instrument.
class AmbiguityError : public Error {
public:
    AmbiguityError(const std::string& msg, std::vector<std::string> candidates)
        : Error(msg), candidates_(std::move(candidates)) {}
    const std::vector<std::string>& candidates() const { return candidates_; }

private:
    std::vector<std::string> candidates_;
};

/// A tool's required snapshot section is missing. Carries the tool kind.
class DataUnavailableError : public Error {
public:
    DataUnavailableError(const std::string& msg, std::string kind)
        : Error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// External text-generation backend failure.
class BackendError : public Error {
public:
    explicit BackendError(const std::string& msg, bool retryable = false)
        : Error(msg), retryable_(retryable) {}
    bool retryable() const { return retryable_; }

private:
    bool retryable_ = false;
};

/// Invalid or inconsistent run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Rank correlation is undefined (an input ranking is fully tied).
class UndefinedCorrelationError : public Error {
public:
    using Error::Error;
};

}  // namespace finsphere
