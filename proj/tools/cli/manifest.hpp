#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace cognates::cli {

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Record of one run: enough to replay it from the output directory.
struct Manifest {
  std::string command;
  std::map<std::string, std::string> settings;
  std::vector<std::filesystem::path> inputs;
  std::vector<std::string> notes;

  void write(const std::filesystem::path& path) const;
};

}  // namespace cognates::cli
