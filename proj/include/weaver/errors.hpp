/// @file errors.hpp
/// @brief Error types for the weaver pipeline, grouped by exit-code category.

#pragma once

#include <stdexcept>
#include <string>

namespace weaver {

/// Process exit codes. Every pipeline termination path maps to exactly one.
enum ExitCode : int {
    kExitOk = 0,               // all tasks succeeded and validation passed
    kExitValidationFailed = 1, // pipeline ran, validator verdict is false
    kExitPlanningFailed = 2,   // no usable task plan could be obtained
    kExitProviderFailed = 3,   // transport exhaustion or unusable generations
    kExitConfigError = 4,      // bad invocation, bad config, bad mock script
};

/// Invalid invocation, unusable run configuration, or a broken mock script.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Transport failure after retry exhaustion, or a structurally unusable
/// provider response at the transport level.
class ProviderError : public std::runtime_error {
public:
    explicit ProviderError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The planner could not obtain a valid, non-empty task plan.
class PlanningError : public std::runtime_error {
public:
    explicit PlanningError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Strict task-list parse failure; message carries the location.
class TaskParseError : public std::runtime_error {
public:
    explicit TaskParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Graph query against a vertex that is not in the graph.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Degenerate vector, dimension mismatch, or a corrupt index file.
class IndexError : public std::runtime_error {
public:
    explicit IndexError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Plan refers to project state that no longer exists (plan/project drift).
class DriftError : public std::runtime_error {
public:
    explicit DriftError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace weaver
