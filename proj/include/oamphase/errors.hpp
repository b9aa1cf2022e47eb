#pragma once

#include <stdexcept>
#include <string>

namespace oam {

// File-system failure carrying the offending path in its message.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(what + ": " + path) {}
};

// Two independent computation routes disagreed beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oam
