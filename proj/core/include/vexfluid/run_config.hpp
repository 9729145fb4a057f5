#pragma once

#include <map>
#include <string>

#include "vexfluid/rational.hpp"

namespace vexfluid {

/// Line-based `key = value` configuration with `#` comments. Keys are
/// free-form dotted names; values are parsed on access. Unknown keys are
/// tolerated (callers validate what they read).
class RunConfig {
  public:
    RunConfig() = default;

    static RunConfig from_file(const std::string& path);
    static RunConfig from_string(const std::string& text);

    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    Rational get_rational(const std::string& key) const;
    Rational get_rational(const std::string& key, const Rational& fallback) const;

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }

    const std::map<std::string, std::string>& entries() const { return kv_; }
    /// Canonical sorted `key = value` dump, used for the config echo.
    std::string dump() const;

  private:
    std::string require(const std::string& key) const;

    std::map<std::string, std::string> kv_;
};

}  // namespace vexfluid
