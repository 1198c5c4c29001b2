#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace awn {

/// Base for all control-plane errors raised by the toolkit. Data-plane
/// failures (bad ciphertexts, malformed frames, protocol violations) are
/// values, not exceptions.
struct AwnError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// protocols
struct PrerequisiteError : AwnError { using AwnError::AwnError; };
struct RoleError : AwnError { using AwnError::AwnError; };

// wire
struct SchemaError : AwnError { using AwnError::AwnError; };

// netsim
struct BindingError : AwnError { using AwnError::AwnError; };
struct UnreachableError : AwnError { using AwnError::AwnError; };
struct HorizonExceeded : AwnError { using AwnError::AwnError; };
struct SetupTimeout : AwnError { using AwnError::AwnError; };

// adversary
struct ScriptError : AwnError { using AwnError::AwnError; };

// bench
struct ParseError : AwnError { using AwnError::AwnError; };
struct IncompleteSummary : AwnError { using AwnError::AwnError; };

/// Aggregates every violation found in a config, not just the first.
struct ValidationError : AwnError {
    explicit ValidationError(std::vector<std::string> problems)
        : AwnError(join(problems)), issues(std::move(problems)) {}

    std::vector<std::string> issues;

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "config validation failed:";
        for (const auto& s : v) {
            out += "\n  - ";
            out += s;
        }
        return out;
    }
};

}  // namespace awn
