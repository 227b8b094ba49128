#include "wii/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wii/errors.hpp"

namespace wii {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
        cfg.kv_[key] = value;
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open config: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse(buf.str());
}

std::string Config::serialize() const {
    std::string out;
    for (const auto& [k, v] : kv_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

void Config::save(const std::string& path) const {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw IoError("cannot open config for writing: " + path);
    os << serialize();
    if (!os) throw IoError("write failed: " + path);
}

void Config::set_i64(const std::string& key, std::int64_t v) { kv_[key] = std::to_string(v); }
void Config::set_u64(const std::string& key, std::uint64_t v) { kv_[key] = std::to_string(v); }

void Config::set_f64(const std::string& key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    kv_[key] = buf;
}

std::string Config::get(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw std::invalid_argument("config: missing key '" + key + "'");
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

std::int64_t Config::get_i64(const std::string& key) const {
    const std::string v = get(key);
    errno = 0;
    char* end = nullptr;
    const long long r = std::strtoll(v.c_str(), &end, 10);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw std::invalid_argument("config: key '" + key + "' is not an integer: " + v);
    return r;
}

std::int64_t Config::get_i64_or(const std::string& key, std::int64_t fallback) const {
    return has(key) ? get_i64(key) : fallback;
}

std::uint64_t Config::get_u64(const std::string& key) const {
    const std::string v = get(key);
    errno = 0;
    char* end = nullptr;
    const unsigned long long r = std::strtoull(v.c_str(), &end, 10);
    if (errno != 0 || end == v.c_str() || *end != '\0' || v.find('-') != std::string::npos)
        throw std::invalid_argument("config: key '" + key + "' is not an unsigned integer: " + v);
    return r;
}

std::uint64_t Config::get_u64_or(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? get_u64(key) : fallback;
}

double Config::get_f64(const std::string& key) const {
    const std::string v = get(key);
    errno = 0;
    char* end = nullptr;
    const double r = std::strtod(v.c_str(), &end);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw std::invalid_argument("config: key '" + key + "' is not a number: " + v);
    return r;
}

double Config::get_f64_or(const std::string& key, double fallback) const {
    return has(key) ? get_f64(key) : fallback;
}

} // namespace wii
