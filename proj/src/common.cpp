#include "charkin/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace charkin {

double sum_abs2(const std::vector<cplx>& v) {
  KahanSum s;
  for (const cplx& z : v) s.add(std::norm(z));
  return s.value();
}

double l2_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  KahanSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add(std::norm(a[i] - b[i]));
  return std::sqrt(s.value());
}

double linf_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double nb = std::sqrt(sum_abs2(b));
  double d = l2_distance(a, b);
  if (nb == 0.0) return d == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return d / nb;
}

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

int thread_count() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& block_fn) {
  if (n == 0) return;
  int workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    block_fn(0, n);
    return;
  }
  std::atomic<std::size_t> next{0};
  // Block size keeps scheduling overhead low and load balanced.
  std::size_t block = std::max<std::size_t>(1, n / (4 * static_cast<std::size_t>(workers)));
  auto work = [&]() {
    for (;;) {
      std::size_t lo = next.fetch_add(block);
      if (lo >= n) return;
      block_fn(lo, std::min(lo + block, n));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

std::string version_string() { return "0.1.0"; }

}  // namespace charkin
