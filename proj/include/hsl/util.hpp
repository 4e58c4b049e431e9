#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace hsl {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Fixed float formatting for CSV/JSON emission: 9 significant digits,
// locale-independent, so reruns are byte-identical.
std::string fmt_g9(double x);
std::string fmt_cplx(cplx z);

// Number of worker threads: HSL_THREADS caps parallelism (0 or unset = all cores).
int worker_threads();

// Chunked parallel map over [0, n). Results must be written by index so the
// output is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// FNV-1a over raw doubles; used for domain fingerprints in reports.
std::uint64_t fnv1a(const double* data, std::size_t n, std::uint64_t seed = 1469598103934665603ull);

}  // namespace hsl
