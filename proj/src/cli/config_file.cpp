#include "ramsey/cli/config_file.hpp"

#include "ramsey/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ramsey::cli {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

ConfigFile ConfigFile::parse(std::string_view text) {
    ConfigFile cfg;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(std::string(line),
                              "line " + std::to_string(line_no) + " is not 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError("", "line " + std::to_string(line_no) + " has an empty key");
        if (value.empty())
            throw ConfigError(key, "empty value");
        if (!cfg.values_.emplace(key, value).second)
            throw ConfigError(key, "given more than once");
    }
    return cfg;
}

ConfigFile ConfigFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("--config", "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void ConfigFile::require_known(const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : values_)
        if (!allowed.count(key))
            throw ConfigError(key, "unknown key");
}

std::string ConfigFile::text(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double parse_number(const std::string& key, std::string_view value) {
    double v = 0.0;
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v))
        throw ConfigError(key, "'" + std::string(value) + "' is not a finite number");
    return v;
}

CoherenceTime parse_coherence(const std::string& key, std::string_view value) {
    if (value == "inf" || value == "infinite" || value == "infinity")
        return CoherenceTime::infinite();
    const double t = parse_number(key, value);
    if (!(t > 0.0))
        throw ConfigError(key, "coherence time must be positive or 'inf'");
    return CoherenceTime(t);
}

double ConfigFile::number(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_number(key, it->second);
}

std::size_t ConfigFile::count(const std::string& key, std::size_t fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    std::size_t v = 0;
    const auto& s = it->second;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(key, "'" + s + "' is not a non-negative integer");
    return v;
}

std::uint64_t ConfigFile::u64(const std::string& key, std::uint64_t fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    std::uint64_t v = 0;
    const auto& s = it->second;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError(key, "'" + s + "' is not an unsigned 64-bit integer");
    return v;
}

CoherenceTime ConfigFile::coherence(const std::string& key, CoherenceTime fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_coherence(key, it->second);
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : value) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> ConfigFile::words(const std::string& key,
                                           const std::vector<std::string>& fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    auto out = split_list(it->second);
    if (out.empty())
        throw ConfigError(key, "empty list");
    return out;
}

} // namespace ramsey::cli
