#pragma once

#include <vector>

#include "wedderburn/algebra.hpp"

namespace wedderburn {

/// How the radical was decided.
enum class RadicalMethod {
  /// p > dim: the kernel of the trace form is exactly the radical.
  TraceForm,
  /// p <= dim but the trace form is nondegenerate. The radical always lies
  /// in the kernel, so it is zero.
  TraceKernelZero,
  /// p <= dim, commutative: the radical is the kernel of a Frobenius power.
  FrobeniusNilradical,
  /// p <= dim, noncommutative, and the trace kernel is itself a nilpotent
  /// two-sided ideal. It lies in the radical, so A is not semisimple; the
  /// basis is a certificate but may be smaller than the full radical.
  NilpotentTraceKernel,
};

const char* to_string(RadicalMethod m);

struct RadicalReport {
  /// gram(i, j) = trace of left multiplication by b_i b_j.
  Matrix gram;
  std::vector<Vec> trace_kernel;
  std::vector<Vec> radical_basis;
  RadicalMethod method;
  bool semisimple;
};

/// Throws UnsupportedCharacteristic when p <= dim and none of the sound
/// small-characteristic criteria decides the question.
RadicalReport radical_report(const Algebra& a);

/// An algebra whose semisimplicity has been certified. Only
/// require_semisimple produces one, so downstream code never runs on an
/// uncertified input.
class SemisimpleAlgebra {
 public:
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Algebra& operator*() const noexcept { return *algebra_; }
  const Algebra* operator->() const noexcept { return algebra_.get(); }
  const RadicalReport& report() const noexcept { return report_; }

 private:
  friend SemisimpleAlgebra require_semisimple(AlgebraPtr a);
  SemisimpleAlgebra(AlgebraPtr a, RadicalReport r) : algebra_(std::move(a)), report_(std::move(r)) {}

  AlgebraPtr algebra_;
  RadicalReport report_;
};

/// Throws NotSemisimpleError (carrying the radical basis) or
/// UnsupportedCharacteristic.
SemisimpleAlgebra require_semisimple(AlgebraPtr a);

/// x^k = 0 for some k <= dim.
bool is_nilpotent(const Algebra& a, std::span<const Residue> x);

}  // namespace wedderburn
