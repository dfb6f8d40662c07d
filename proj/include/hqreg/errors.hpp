#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqreg {

// Invalid run configuration (bad qubit count, missing checkpoint, ...).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Array/matrix dimensions do not match what an operation expects.
class ShapeError : public std::invalid_argument {
public:
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input data could not be loaded or validated (CSV rows, catalogs, ...).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text parse failure; `offset` is the byte position in the input.
class ParseError : public DataError {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : DataError(msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace hqreg
