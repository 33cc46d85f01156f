#pragma once

#include <stdexcept>
#include <string>

namespace sorex {

// Error categories map onto the CLI exit-code contract:
// 0 success, 1 config error, 2 data error, 3 anything else.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sorex
