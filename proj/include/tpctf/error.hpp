#pragma once

#include <stdexcept>
#include <string>

namespace tpctf {

/// Parameter set fails a construction invariant (positivity, ordering, ...).
class ConstructionError : public std::invalid_argument {
 public:
  explicit ConstructionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Parameters violate a bank condition; the message names the failing inequality.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Tensor/vector extents inconsistent with the requested operation.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Frequency grid unusable (odd, too small, not divisible by the sampling factor).
class GridError : public std::invalid_argument {
 public:
  explicit GridError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Missing or inconsistent pipeline configuration.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Exact rational arithmetic left the supported range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& msg) : std::overflow_error(msg) {}
};

/// File I/O failure or malformed file.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tpctf
