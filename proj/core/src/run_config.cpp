#include "vexfluid/run_config.hpp"

#include <fstream>
#include <sstream>

#include "vexfluid/errors.hpp"

namespace vexfluid {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config '" + path + "'");
    std::stringstream buffer;
    buffer << is.rdbuf();
    return from_string(buffer.str());
}

RunConfig RunConfig::from_string(const std::string& text) {
    RunConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        }
        cfg.kv_[key] = value;
    }
    return cfg;
}

std::string RunConfig::require(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

std::string RunConfig::get_string(const std::string& key) const { return require(key); }

std::string RunConfig::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key) const {
    const std::string v = require(key);
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::logic_error&) {
        // Rationals like 9/4 are accepted wherever a real is expected.
        try {
            return Rational::parse(v).to_double();
        } catch (const Error&) {
            throw ConfigError("config key '" + key + "': bad number '" + v + "'");
        }
    }
}

double RunConfig::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long RunConfig::get_int(const std::string& key) const {
    const std::string v = require(key);
    try {
        std::size_t pos = 0;
        const long i = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::logic_error&) {
        throw ConfigError("config key '" + key + "': bad integer '" + v + "'");
    }
}

long RunConfig::get_int(const std::string& key, long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = require(key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config key '" + key + "': bad boolean '" + v + "'");
}

Rational RunConfig::get_rational(const std::string& key) const {
    try {
        return Rational::parse(require(key));
    } catch (const DomainError& e) {
        throw ConfigError("config key '" + key + "': " + e.what());
    }
}

Rational RunConfig::get_rational(const std::string& key, const Rational& fallback) const {
    return has(key) ? get_rational(key) : fallback;
}

std::string RunConfig::dump() const {
    std::string out;
    for (const auto& [k, v] : kv_) {
        out += k + " = " + v + "\n";
    }
    return out;
}

}  // namespace vexfluid
