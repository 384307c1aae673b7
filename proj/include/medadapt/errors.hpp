#pragma once

#include <stdexcept>
#include <string>

namespace medadapt {

// Error taxonomy shared by every module. The CLI maps categories onto
// process exit codes: validation-class failures exit 3, everything else
// that escapes a command exits 1 (usage errors exit 2 before we get here).
enum class ErrorCategory {
    parse,
    validation,
    precondition,
    template_render,
    io,
    transport,
    protocol,
    capability,
};

inline const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::parse: return "parse";
        case ErrorCategory::validation: return "validation";
        case ErrorCategory::precondition: return "precondition";
        case ErrorCategory::template_render: return "template";
        case ErrorCategory::io: return "io";
        case ErrorCategory::transport: return "transport";
        case ErrorCategory::protocol: return "protocol";
        case ErrorCategory::capability: return "capability";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& m) : Error(ErrorCategory::parse, m) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& m) : Error(ErrorCategory::validation, m) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& m) : Error(ErrorCategory::precondition, m) {}
};

class TemplateError : public Error {
public:
    explicit TemplateError(const std::string& m) : Error(ErrorCategory::template_render, m) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& m) : Error(ErrorCategory::io, m) {}
};

// Transient transport failure (connection refused, timeout, 408/429/5xx).
// Retryable; carries the attempt count once retries have been exhausted.
class TransportError : public Error {
public:
    explicit TransportError(const std::string& m, int attempts = 1, int status = 0)
        : Error(ErrorCategory::transport, m), attempts_(attempts), status_(status) {}

    int attempts() const noexcept { return attempts_; }
    int status() const noexcept { return status_; }

private:
    int attempts_;
    int status_;
};

// Remote refusal (non-transient HTTP status or malformed reply). Not retried.
class ProtocolError : public Error {
public:
    explicit ProtocolError(const std::string& m, int status = 0)
        : Error(ErrorCategory::protocol, m), status_(status) {}

    int status() const noexcept { return status_; }

private:
    int status_;
};

class CapabilityError : public Error {
public:
    explicit CapabilityError(const std::string& m) : Error(ErrorCategory::capability, m) {}
};

}  // namespace medadapt
