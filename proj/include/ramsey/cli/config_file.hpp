// Flat "key = value" configuration files with # comments.
#pragma once

#include "ramsey/core/params.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey::cli {

/**
 * @brief Parsed configuration. Typed getters fall back to a default when the
 * key is absent and throw ConfigError (naming the key) when the value is malformed.
 */
class ConfigFile {
public:
    ConfigFile() = default;
    static ConfigFile parse(std::string_view text);
    static ConfigFile load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::map<std::string, std::string>& entries() const noexcept { return values_; }

    /// Throws ConfigError for the first key outside `allowed`.
    void require_known(const std::set<std::string>& allowed) const;

    std::string text(const std::string& key, const std::string& fallback) const;
    double number(const std::string& key, double fallback) const;
    std::size_t count(const std::string& key, std::size_t fallback) const;
    std::uint64_t u64(const std::string& key, std::uint64_t fallback) const;
    /// A positive number or "inf".
    CoherenceTime coherence(const std::string& key, CoherenceTime fallback) const;
    /// Comma- or whitespace-separated values.
    std::vector<std::string> words(const std::string& key,
                                   const std::vector<std::string>& fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

private:
    std::map<std::string, std::string> values_;
};

double parse_number(const std::string& key, std::string_view value);
CoherenceTime parse_coherence(const std::string& key, std::string_view value);
std::vector<std::string> split_list(std::string_view value);

} // namespace ramsey::cli
