#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdeg {

/// A computation exceeded a configured size limit (order cap, coset limit, ...).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string &what, std::size_t progress = 0)
      : std::runtime_error(what), progress_(progress) {}

  /// Work completed before the limit was hit (e.g. cosets defined so far).
  std::size_t progress() const noexcept { return progress_; }

private:
  std::size_t progress_;
};

/// An argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed text input. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &reason, std::size_t position)
      : std::runtime_error(reason + " at position " + std::to_string(position)),
        reason_(reason), position_(position) {}

  const std::string &reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string reason_;
  std::size_t position_;
};

/// A map that must exist mathematically turned out not to be well defined.
/// Always indicates a bug; never caught by library code.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace tdeg
