#include "hsl/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace hsl {

std::string fmt_g9(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string fmt_cplx(cplx z) {
  return fmt_g9(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_g9(z.imag()) + "i";
}

int worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("HSL_THREADS");
  if (env && *env) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(std::min<long>(v, hw));
  }
  return static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  int nt = worker_threads();
  if (nt <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::uint64_t fnv1a(const double* data, std::size_t n, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &data[i], sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace hsl
