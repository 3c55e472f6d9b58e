#pragma once

#include <stdexcept>
#include <string>

namespace cyclemod {

/// Malformed input: bad literal, unknown name, precondition on user data.
/// The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, std::size_t position = npos)
      : std::invalid_argument(what), position_(position) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed request outside the supported universe (unsupported
/// embedding, field over the size cap, support outside a declared table).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cyclemod
