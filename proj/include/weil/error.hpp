#pragma once

#include <stdexcept>
#include <string>

namespace weil {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatches between operands (caller bugs, not data problems).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("dimension: " + what) {}
};

// A named invariant failed while validating input data.  The invariant name is
// stable and machine-checkable; `where` locates the offending object.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, std::string where, const std::string& detail)
      : Error("invariant '" + invariant + "' failed at " + where + ": " + detail),
        invariant_(std::move(invariant)),
        where_(std::move(where)) {}

  const std::string& invariant() const { return invariant_; }
  const std::string& where() const { return where_; }

 private:
  std::string invariant_;
  std::string where_;
};

// Malformed input documents: bad JSON shape, unknown keys, unknown kinds.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error("schema: " + what) {}
};

}  // namespace weil
