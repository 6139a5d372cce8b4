#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wedderburn {

enum class ErrorCode {
  DivisionByZero,
  NotPrime,
  InvalidInput,
  NotAssociative,
  NoIdentity,
  ParentMismatch,
  NotIdempotent,
  NotCommutative,
  UnsupportedCharacteristic,
  NotSemisimple,
  SplitIterationCapExceeded,
  WitnessSolveFailed,
  InvariantViolation,
  InvalidCayley,
  ReduciblePolynomial,
  ModulusMismatch,
  ShapeMismatch,
  InternalSamplingFailure,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when (b_i b_j) b_k != b_i (b_j b_k); carries the offending triple.
class NotAssociativeError : public Error {
 public:
  explicit NotAssociativeError(std::array<std::size_t, 3> triple);

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

/// Raised by require_semisimple. The radical basis is the certificate.
class NotSemisimpleError : public Error {
 public:
  explicit NotSemisimpleError(std::vector<std::vector<std::uint32_t>> radical_basis);

  const std::vector<std::vector<std::uint32_t>>& radical_basis() const noexcept {
    return radical_basis_;
  }

 private:
  std::vector<std::vector<std::uint32_t>> radical_basis_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

/// Internal consistency checks that are always on.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvariantViolation, what);
}

}  // namespace wedderburn
