#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jratio {

enum class ErrorCode {
  PointOutsideDomain,
  PoleEncountered,
  DomainError,
  UnsupportedImage,
  CoincidentPoints,
  SelfMapViolation,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API translates them one-to-one into status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& input);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace jratio
