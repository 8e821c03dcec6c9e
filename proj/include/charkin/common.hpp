#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charkin {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Configuration / precondition violations. Mapped to CLI exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failures (monitor breach, divergence). Mapped to CLI exit code 1.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File/format problems. Mapped to CLI exit code 2 (usage-level failures).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Compensated (Kahan) accumulation. Summation order is fixed by the caller,
// so results do not depend on the worker thread count.
// ---------------------------------------------------------------------------

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

struct KahanSumCplx {
  KahanSum re, im;

  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

// Fixed-order compensated reductions over whole buffers.
double sum_abs2(const std::vector<cplx>& v);
double l2_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);
double linf_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Relative L2 distance ‖a−b‖/‖b‖ (0 when both are zero).
double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b);

// ---------------------------------------------------------------------------
// Threading: a plain blocked parallel_for. Each index is processed exactly
// once by some worker; per-index work must be independent.
// ---------------------------------------------------------------------------

/// Set the worker count used by parallel_for (0 = hardware default).
void set_thread_count(int n);
int thread_count();

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& block_fn);

// Convenience: per-index form.
template <typename F>
void parallel_for_each(std::size_t n, F&& fn) {
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

std::string version_string();

}  // namespace charkin
