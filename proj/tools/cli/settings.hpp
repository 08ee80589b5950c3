#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cognates::cli {

/// Usage problem: unknown value, missing required key, malformed number.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a `key = value` config file. Blank lines and `#` comments are
/// skipped; underscores in keys are treated as dashes.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Resolved string settings: flag values override config-file values,
/// which override defaults.
class Settings {
 public:
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  bool has(const std::string& key) const;

  std::string str(const std::string& key) const;
  std::optional<std::string> maybe(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::uint64_t unsigned_integer(const std::string& key) const;
  double real(const std::string& key) const;
  std::vector<std::string> list(const std::string& key) const;
  /// Path setting that must name an existing file.
  std::filesystem::path existing_file(const std::string& key) const;

  const std::map<std::string, std::string>& all() const noexcept { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace cognates::cli
