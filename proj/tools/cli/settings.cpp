#include "cli/settings.hpp"

#include <algorithm>
#include <fstream>

#include "cognates/text.hpp"

namespace cognates::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path.string() + "'");
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    auto key = trim(std::string_view(body).substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty()) throw UsageError(path.string() + ":" + std::to_string(line_no) + ": empty key");
    out[key] = trim(std::string_view(body).substr(eq + 1));
  }
  return out;
}

bool Settings::has(const std::string& key) const {
  const auto it = values_.find(key);
  return it != values_.end() && !it->second.empty();
}

std::string Settings::str(const std::string& key) const {
  if (!has(key)) throw UsageError("missing required setting --" + key);
  return values_.at(key);
}

std::optional<std::string> Settings::maybe(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return values_.at(key);
}

std::int64_t Settings::integer(const std::string& key) const {
  const auto v = text::parse_int(str(key));
  if (!v) throw UsageError("--" + key + ": expected an integer, got '" + str(key) + "'");
  return *v;
}

std::uint64_t Settings::unsigned_integer(const std::string& key) const {
  const auto v = integer(key);
  if (v < 0) throw UsageError("--" + key + ": must be non-negative");
  return static_cast<std::uint64_t>(v);
}

double Settings::real(const std::string& key) const {
  const auto v = text::parse_double(str(key));
  if (!v) throw UsageError("--" + key + ": expected a number, got '" + str(key) + "'");
  return *v;
}

std::vector<std::string> Settings::list(const std::string& key) const {
  const auto value = str(key);
  std::vector<std::string> out;
  for (auto tok : text::split(value, ',')) {
    auto t = trim(tok);
    if (!t.empty()) out.push_back(std::move(t));
  }
  if (out.empty()) throw UsageError("--" + key + ": empty list");
  return out;
}

std::filesystem::path Settings::existing_file(const std::string& key) const {
  std::filesystem::path p = str(key);
  if (!std::filesystem::is_regular_file(p)) {
    throw UsageError("--" + key + ": file '" + p.string() + "' does not exist");
  }
  return p;
}

}  // namespace cognates::cli
