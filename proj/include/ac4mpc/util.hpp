#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ac4mpc {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that seeded runs produce identical streams on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; one spare kept between calls.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
  }

  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
  bool has_spare_{false};
  double spare_{0.0};
};

/// Runs fn(begin, end, chunk_index) over [0, n) in fixed-size chunks,
/// distributing chunks over a small thread pool. Chunk boundaries depend only
/// on `chunk`, never on the thread count, so per-chunk partial results can be
/// combined in chunk order to keep reductions bit-reproducible.
inline void parallel_chunks(std::size_t n, std::size_t chunk,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (chunk == 0) throw std::invalid_argument("parallel_chunks: chunk must be positive");
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(std::min<unsigned>(hw, 8), n_chunks));
  if (n_threads <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      fn(c * chunk, std::min(n, (c + 1) * chunk), c);
    }
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    threads.emplace_back([=, &fn]() {
      for (std::size_t c = t; c < n_chunks; c += n_threads) {
        fn(c * chunk, std::min(n, (c + 1) * chunk), c);
      }
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace ac4mpc
