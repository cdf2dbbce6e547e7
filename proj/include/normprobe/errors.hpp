#pragma once

#include <stdexcept>
#include <string>

namespace normprobe {

/// Base of every error the harness throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fixture or corpus file that does not match its record schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Out-of-domain arguments to a pure function (bad sigma, bad clamp, p0 outside (0,1), ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A prompt template placeholder with no binding.
class RenderError : public Error {
public:
    RenderError(const std::string& placeholder)
        : Error("unbound placeholder '" + placeholder + "'"), placeholder_(placeholder) {}

    const std::string& placeholder() const noexcept { return placeholder_; }

private:
    std::string placeholder_;
};

class FormattingError : public Error {
public:
    using Error::Error;
};

/// Retries exhausted or a non-retryable rejection from the endpoint.
class TransportError : public Error {
public:
    using Error::Error;
};

/// Missing or rejected API credential. Never retried.
class CredentialError : public Error {
public:
    using Error::Error;
};

/// A probe whose declared kind does not match the context it carries.
class ContractError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// A referenced run directory that does not exist or is empty.
class RunNotFound : public Error {
public:
    explicit RunNotFound(const std::string& run_id)
        : Error("run '" + run_id + "' not found"), run_id_(run_id) {}

    const std::string& run_id() const noexcept { return run_id_; }

private:
    std::string run_id_;
};

} // namespace normprobe
