#pragma once

#include <cstddef>
#include <istream>
#include <string>

#include "cognates/error.hpp"

namespace cognates::detail {

// Line-at-a-time reader that remembers the 1-based line number for errors.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    return true;
  }

  // Skips blank lines and `#` comments.
  bool next_data(std::string& line) {
    while (next(line)) {
      if (!line.empty() && line.front() != '#') return true;
    }
    return false;
  }

  std::size_t line_no() const noexcept { return line_no_; }
  const std::string& source() const noexcept { return source_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_, line_no_, what);
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

}  // namespace cognates::detail
