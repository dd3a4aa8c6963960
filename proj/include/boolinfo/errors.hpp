#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolinfo {

/// Thrown when a bound is evaluated outside its proven validity range.
/// Callers that want a blank value instead of an exception should test the
/// corresponding *_premise predicate first.
class premise_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Parse failure in a textual function spec, with the offending position.
class spec_parse_error : public std::invalid_argument {
public:
  spec_parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace boolinfo
