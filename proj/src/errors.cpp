#include "freeprod/errors.hpp"

#include <sstream>

namespace freeprod {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::ostringstream os;
  os << "invalid group spec";
  for (const auto& v : violations) os << "; " << v;
  return os.str();
}

}  // namespace

SpecError::SpecError(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)),
      offset_(offset),
      detail_(message) {}

}  // namespace freeprod
