#pragma once

#include <stdexcept>
#include <string>

namespace hyperlines {

enum class ErrorKind {
  Domain,     // an input violates a type invariant or precondition
  Dimension,  // operands of mismatched size
  Range,      // parameter outside the numerically safe range
  Feature,    // operation not available for this n (g0 needs n=2, octonions n=6)
  Numeric,    // a numerical procedure failed to converge
  Schema,     // malformed JSON or unknown names at the command layer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error domain_error(const std::string& what) { return {ErrorKind::Domain, what}; }
inline Error dimension_error(const std::string& what) { return {ErrorKind::Dimension, what}; }
inline Error range_error(const std::string& what) { return {ErrorKind::Range, what}; }
inline Error feature_error(const std::string& what) { return {ErrorKind::Feature, what}; }
inline Error numeric_error(const std::string& what) { return {ErrorKind::Numeric, what}; }
inline Error schema_error(const std::string& what) { return {ErrorKind::Schema, what}; }

}  // namespace hyperlines
