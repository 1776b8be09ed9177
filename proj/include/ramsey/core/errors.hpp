// Error types raised by the ramsey library.
#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// An outcome has (numerically) zero probability under the current prior.
class ZeroEvidence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series evaluation hit its term cap before reaching tolerance.
class TruncationNotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An alpha series is too short for the comb it is paired with.
class InsufficientSeries : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Missing or malformed configuration value; carries the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error("config key '" + key + "': " + message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

} // namespace ramsey
