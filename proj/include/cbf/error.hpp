#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cbf {

// Precondition violated by a caller-supplied argument.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FormatFailure {
  bad_magic,
  malformed_header,
  truncated_payload,
  checksum_mismatch,
  stale_cache,
};

const char* to_string(FormatFailure failure) noexcept;

// Raised while decoding one of the binary containers.
class FormatError : public std::runtime_error {
 public:
  FormatError(FormatFailure failure, const std::string& detail)
      : std::runtime_error(std::string(to_string(failure)) + ": " + detail),
        failure_(failure) {}

  FormatFailure failure() const noexcept { return failure_; }

 private:
  FormatFailure failure_;
};

// Configuration that breaks one or more invariants. Every violation is kept,
// each prefixed with the key path it concerns.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Configuration text that cannot be parsed at all.
class ConfigSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Fourier index falls where the pulse spectrum is too weak to invert.
class BandViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// OMP selected a support whose submatrix is rank deficient.
class DegenerateSupport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An approximation operator could not be assembled from its index sets.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cbf
