#pragma once

#include <stdexcept>
#include <string>

namespace bgcolor {

/// Malformed textual input (DIMACS, vertex lists, edge files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An instance exceeds a size or memory guard of the algorithm handling it.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bgcolor
