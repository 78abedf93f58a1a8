#pragma once

#include <stdexcept>
#include <string>

namespace conirr {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class EmptyGenerators : public std::invalid_argument {
 public:
  explicit EmptyGenerators(const std::string& what = "cone has no nonzero generator")
      : std::invalid_argument(what) {}
};

/// Some nonzero x has both x and -x in the cone.
class UnpointedCone : public std::invalid_argument {
 public:
  explicit UnpointedCone(const std::string& what = "generators span a cone containing a line")
      : std::invalid_argument(what) {}
};

/// Raised when exhaustive face enumeration exceeds the configured bound.
class FaceCountLimit : public std::runtime_error {
 public:
  explicit FaceCountLimit(const std::string& what) : std::runtime_error(what) {}
};

class UnknownFixture : public std::invalid_argument {
 public:
  explicit UnknownFixture(const std::string& name)
      : std::invalid_argument("unknown fixture: " + name) {}
};

/// Malformed problem file or rational string. `line` is 0 when unknown.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace conirr
