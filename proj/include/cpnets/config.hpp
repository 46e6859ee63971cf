#pragma once

// Sectioned key-value experiment settings. Every experiment declares its keys
// with defaults; reading a file or override with a key outside that schema is
// a ConfigError.

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpnets {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SettingDef {
  std::string key;  // "section.name"
  std::string value;
  std::string help;
};

class Settings {
public:
  Settings() = default;
  explicit Settings(std::vector<SettingDef> schema);

  /// INI text: "[section]" headers, "name = value" lines, ';' or '#' comments.
  void apply_text(const std::string& text, const std::string& origin = "<text>");
  void apply_file(const std::filesystem::path& path);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& str(const std::string& key) const;
  double real(const std::string& key) const;
  std::uint64_t u64(const std::string& key) const;
  std::size_t count(const std::string& key) const;
  bool flag(const std::string& key) const;
  /// Comma-separated items, trimmed.
  std::vector<std::string> list(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;
  std::vector<std::uint64_t> u64s(const std::string& key) const;

  /// Effective values as INI text, in schema order with help comments.
  std::string ini() const;
  const std::vector<SettingDef>& schema() const { return schema_; }

private:
  std::vector<SettingDef> schema_;
  std::map<std::string, std::string> values_;
};

/// Reads only the experiment id from an INI file.
std::string config_experiment_id(const std::filesystem::path& path);

}  // namespace cpnets
