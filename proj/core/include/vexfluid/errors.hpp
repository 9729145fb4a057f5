#pragma once

#include <stdexcept>
#include <string>

namespace vexfluid {

/// Error categories, mapped to CLI exit codes and machine-readable
/// "error: <category>: <message>" lines on stderr.
enum class ErrorCategory {
    usage = 2,
    config = 3,
    domain = 4,
    grid = 5,
    threshold = 6,
    cfl = 7,
    window = 8,
    io = 9,
};

inline const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::usage: return "usage";
        case ErrorCategory::config: return "config";
        case ErrorCategory::domain: return "domain";
        case ErrorCategory::grid: return "grid";
        case ErrorCategory::threshold: return "threshold";
        case ErrorCategory::cfl: return "cfl";
        case ErrorCategory::window: return "window";
        case ErrorCategory::io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}
    ErrorCategory category() const { return category_; }

  private:
    ErrorCategory category_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(ErrorCategory::domain, msg) {}
};

struct GridMismatchError : Error {
    explicit GridMismatchError(const std::string& msg) : Error(ErrorCategory::grid, msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ErrorCategory::config, msg) {}
};

struct WindowError : Error {
    explicit WindowError(const std::string& msg) : Error(ErrorCategory::window, msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(ErrorCategory::io, msg) {}
};

struct CflError : Error {
    explicit CflError(const std::string& msg) : Error(ErrorCategory::cfl, msg) {}
};

}  // namespace vexfluid
