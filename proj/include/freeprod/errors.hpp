#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace freeprod {

// Operation applied outside its domain, e.g. multiplying letters from
// different factors or using an element id that is not in the factor.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A group specification failed validation. Carries every violation found,
// each prefixed with the offending factor index where one applies.
class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Malformed word expression. offset() is a byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

// A computation would exceed a configured budget or overflow 64-bit ids.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed, e.g. a witness that does not
// describe the word it was supplied with.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace freeprod
