#include "wedderburn/field.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

namespace wedderburn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::SplitIterationCapExceeded: return "SplitIterationCapExceeded";
    case ErrorCode::WitnessSolveFailed: return "WitnessSolveFailed";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidCayley: return "InvalidCayley";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InternalSamplingFailure: return "InternalSamplingFailure";
  }
  return "Unknown";
}

NotAssociativeError::NotAssociativeError(std::array<std::size_t, 3> triple)
    : Error(ErrorCode::NotAssociative,
            "structure constants are not associative at basis triple (" +
                std::to_string(triple[0]) + ", " + std::to_string(triple[1]) + ", " +
                std::to_string(triple[2]) + ")"),
      triple_(triple) {}

NotSemisimpleError::NotSemisimpleError(std::vector<std::vector<std::uint32_t>> radical_basis)
    : Error(ErrorCode::NotSemisimple,
            "algebra is not semisimple: radical has dimension " +
                std::to_string(radical_basis.size())),
      radical_basis_(std::move(radical_basis)) {}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxModulus || p == 2 || !is_prime(p))
    fail(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
  lazy_limit_ = std::numeric_limits<std::uint64_t>::max() / sq - 1;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return reduce(t0);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Vec vec_add(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const PrimeField& f, std::span<const Residue> a, std::span<const Residue> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const PrimeField& f, Residue s, std::span<const Residue> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

void vec_axpy(const PrimeField& f, Residue s, std::span<const Residue> b, std::span<Residue> a) {
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(s, b[i]));
}

bool vec_is_zero(std::span<const Residue> a) {
  return std::all_of(a.begin(), a.end(), [](Residue x) { return x == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace wedderburn
