#include "wedderburn/semisimple.hpp"

#include <string>

namespace wedderburn {

const char* to_string(RadicalMethod m) {
  switch (m) {
    case RadicalMethod::TraceForm: return "trace_form";
    case RadicalMethod::TraceKernelZero: return "trace_kernel_zero";
    case RadicalMethod::FrobeniusNilradical: return "frobenius_nilradical";
    case RadicalMethod::NilpotentTraceKernel: return "nilpotent_trace_kernel";
  }
  return "unknown";
}

namespace {

Matrix trace_gram(const Algebra& a) {
  const std::size_t n = a.dim();
  const PrimeField& f = a.field();
  // trace(L_x) = sum_l x_l t_l with t_l = sum_j c[l][j][j]
  Vec t(n, 0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) t[l] = f.add(t[l], a.constant(l, j, j));
  Matrix gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Residue s = 0;
      const auto prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) s = f.add(s, f.mul(prod[k], t[k]));
      gram(i, j) = s;
    }
  return gram;
}

std::vector<Vec> frobenius_nilradical(const Algebra& a) {
  // x^{p^k} = 0 for every nilpotent x once p^k >= dim
  const Matrix fr = frobenius_matrix(a);
  Matrix power = fr;
  for (std::uint64_t reach = a.modulus(); reach < a.dim(); reach *= a.modulus()) power = power * fr;
  return kernel_basis(power);
}

RowEchelon span_of(const Algebra& a, const std::vector<Vec>& vectors) {
  return column_space(Matrix::from_columns(a.field(), vectors, a.dim()));
}

bool is_nilpotent_ideal(const Algebra& a, const std::vector<Vec>& basis) {
  const RowEchelon span = span_of(a, basis);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec b = unit_vector(a.dim(), i);
    for (const auto& k : basis)
      if (!coordinates_in_echelon_basis(span, a.multiply(b, k)) ||
          !coordinates_in_echelon_basis(span, a.multiply(k, b)))
        return false;
  }
  std::vector<Vec> power = basis;
  std::size_t dim = basis.size();
  while (dim > 0) {
    std::vector<Vec> products;
    for (const auto& x : power)
      for (const auto& y : basis) products.push_back(a.multiply(x, y));
    const RowEchelon next = span_of(a, products);
    if (next.rank() >= dim) return false;
    dim = next.rank();
    power.clear();
    for (std::size_t r = 0; r < next.rank(); ++r)
      power.emplace_back(next.reduced.row(r).begin(), next.reduced.row(r).end());
  }
  return true;
}

}  // namespace

RadicalReport radical_report(const Algebra& a) {
  Matrix gram = trace_gram(a);
  std::vector<Vec> kernel = kernel_basis(gram);
  RadicalReport r{std::move(gram), kernel, {}, RadicalMethod::TraceForm, false};
  if (a.modulus() > a.dim()) {
    r.radical_basis = std::move(kernel);
  } else if (kernel.empty()) {
    r.method = RadicalMethod::TraceKernelZero;
  } else if (a.is_commutative()) {
    r.method = RadicalMethod::FrobeniusNilradical;
    r.radical_basis = frobenius_nilradical(a);
  } else if (is_nilpotent_ideal(a, kernel)) {
    r.method = RadicalMethod::NilpotentTraceKernel;
    r.radical_basis = std::move(kernel);
  } else {
    fail(ErrorCode::UnsupportedCharacteristic,
         "p = " + std::to_string(a.modulus()) + " <= dim = " + std::to_string(a.dim()) +
             ": trace form is degenerate on a noncommutative algebra and cannot certify "
             "semisimplicity");
  }
  r.semisimple = r.radical_basis.empty();
  return r;
}

SemisimpleAlgebra require_semisimple(AlgebraPtr a) {
  RadicalReport r = radical_report(*a);
  if (!r.semisimple) throw NotSemisimpleError(r.radical_basis);
  return SemisimpleAlgebra(std::move(a), std::move(r));
}

bool is_nilpotent(const Algebra& a, std::span<const Residue> x) {
  Vec power(x.begin(), x.end());
  for (std::size_t k = 1; k <= a.dim(); ++k) {
    if (vec_is_zero(power)) return true;
    power = a.multiply(power, x);
  }
  return vec_is_zero(power);
}

}  // namespace wedderburn
