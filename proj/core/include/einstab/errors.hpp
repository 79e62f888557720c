#ifndef EINSTAB_ERRORS_HPP
#define EINSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace einstab {

/// Bad input data: dimension mismatches, broken tensor symmetries,
/// malformed manifold specs.  Maps to CLI exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
  input_error(const std::string& msg, std::string field_path)
      : std::runtime_error(msg), path_(std::move(field_path)) {}

  /// Path of the first offending field ("factors[1].volume"), empty if
  /// the error is not tied to a specific field.
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Internal numeric failure: eigensolver non-convergence, invariant
/// violation in a tensor we constructed ourselves.  Maps to CLI exit code 2.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace einstab

#endif
