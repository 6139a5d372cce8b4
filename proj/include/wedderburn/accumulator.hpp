#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "wedderburn/field.hpp"

namespace wedderburn {

/// Accumulates sum_l s_l * row_l into a uint64 buffer, reducing mod p only
/// when the next product could overflow.
class RowAccumulator {
 public:
  RowAccumulator(const PrimeField& f, std::size_t width)
      : p_(f.modulus()), acc_(width, 0), limit_(f.lazy_limit()) {}

  void add_scaled(Residue s, const Residue* row) {
    if (s == 0) return;
    if (++terms_ >= limit_) flush();
    const std::uint64_t s64 = s;
    for (std::size_t j = 0; j < acc_.size(); ++j) acc_[j] += s64 * row[j];
  }

  void store(Residue* out) const {
    for (std::size_t j = 0; j < acc_.size(); ++j) out[j] = static_cast<Residue>(acc_[j] % p_);
  }

  Vec result() const {
    Vec out(acc_.size());
    store(out.data());
    return out;
  }

  void clear() {
    std::fill(acc_.begin(), acc_.end(), 0);
    terms_ = 0;
  }

 private:
  void flush() {
    for (auto& x : acc_) x %= p_;
    terms_ = 1;
  }

  std::uint64_t p_;
  std::vector<std::uint64_t> acc_;
  std::uint64_t limit_;
  std::uint64_t terms_ = 0;
};

}  // namespace wedderburn
