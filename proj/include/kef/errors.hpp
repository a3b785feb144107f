#pragma once

#include <stdexcept>
#include <string>

namespace kef {

/// Malformed input: bad vertex ids, missing edges, unparseable files.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size or work cap was exceeded.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// The operation's hypothesis does not hold for this graph.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace kef
