#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace wii {

// Flat key=value configuration dialect used by dataset generation, NFSC
// class definitions and experiment setups.  Lines are `key = value`;
// '#' starts a comment; blank lines are ignored.  Serialisation is
// canonical (sorted keys) so configs embedded in artifacts are stable.
class Config {
  public:
    Config() = default;

    static Config parse(const std::string& text);
    static Config load(const std::string& path);

    std::string serialize() const;
    void save(const std::string& path) const;

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    void set_i64(const std::string& key, std::int64_t v);
    void set_u64(const std::string& key, std::uint64_t v);
    void set_f64(const std::string& key, double v);

    // Getters throw std::invalid_argument on missing key or bad value.
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    std::int64_t get_i64(const std::string& key) const;
    std::int64_t get_i64_or(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_u64(const std::string& key) const;
    std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;
    double get_f64(const std::string& key) const;
    double get_f64_or(const std::string& key, double fallback) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

} // namespace wii
