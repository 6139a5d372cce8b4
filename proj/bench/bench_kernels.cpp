// Wall-clock comparison of the OpenMP kernels against their serial
// references. Usage: bench_kernels [repetitions]
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include <omp.h>

#include "wedderburn/generators.hpp"
#include "wedderburn/kernels.hpp"

namespace {

using namespace wedderburn;
using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    body();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  }
  return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(3)
            << std::setw(12) << serial_ms << std::setw(12) << parallel_ms << std::setw(9)
            << serial_ms / parallel_ms << "x" << (same ? "" : "  RESULTS DIFFER") << "\n";
}

Vec random_vec(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> d(0, f.modulus() - 1);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  const PrimeField f(97);
  std::mt19937_64 rng(1);
  std::cout << "threads: " << omp_get_max_threads() << ", best of " << reps << " runs\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial ms" << std::setw(12)
            << "omp ms" << std::setw(10) << "speedup" << "\n";

  for (std::size_t n : {64, 256}) {
    const Vec a = random_vec(f, n * n, rng), b = random_vec(f, n * n, rng);
    Vec c1(n * n), c2(n * n);
    const double s = best_ms(reps, [&] { kernels::serial::matmul(f, a, b, c1, n, n, n); });
    const double p = best_ms(reps, [&] { kernels::matmul(f, a, b, c2, n, n, n); });
    row("matmul " + std::to_string(n), s, p, c1 == c2);
  }

  {
    const std::size_t rows = 512, cols = 512;
    Vec base = random_vec(f, rows * cols, rng);
    const Residue inv = f.inv(base[0] == 0 ? (base[0] = 1) : base[0]);
    for (std::size_t j = 0; j < cols; ++j) base[j] = f.mul(base[j], inv);
    Vec d1, d2;
    const double s = best_ms(reps, [&] {
      d1 = base;
      kernels::serial::eliminate_column(f, d1, rows, cols, 0, 0);
    });
    const double p = best_ms(reps, [&] {
      d2 = base;
      kernels::eliminate_column(f, d2, rows, cols, 0, 0);
    });
    row("eliminate_column 512x512", s, p, d1 == d2);
  }

  {
    const auto sum = planted({{4, 1}, {4, 1}, {3, 2}, {2, 2}, {2, 1}, {1, 2}}, 97);
    const Vec& sc = sum.presentation->structure_constants();
    const std::size_t n = sum.presentation->dim();
    std::optional<std::array<std::size_t, 3>> w1, w2;
    const double s = best_ms(reps, [&] { w1 = kernels::serial::associativity_witness(f, sc, n); });
    const double p = best_ms(reps, [&] { w2 = kernels::associativity_witness(f, sc, n); });
    row("associativity scan dim " + std::to_string(n), s, p, w1 == w2);
  }

  {
    const std::size_t count = 1 << 16;
    auto ok = [](std::size_t i) {
      std::uint64_t h = i;
      for (int r = 0; r < 200; ++r) h = h * 6364136223846793005ULL + 1442695040888963407ULL;
      return i != count - 7 || h == 0;
    };
    std::optional<std::size_t> r1, r2;
    const double s = best_ms(reps, [&] { r1 = kernels::serial::first_failure(count, ok); });
    const double p = best_ms(reps, [&] { r2 = kernels::first_failure(count, ok); });
    row("first_failure 65536", s, p, r1 == r2);
  }
  return 0;
}
