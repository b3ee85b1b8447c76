#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "itrev/postulates.hpp"

namespace itrev::internal {

inline World world(int i) { return World{static_cast<std::uint8_t>(i)}; }

class Sink {
 public:
  void instance() { ++instances; }

  template <typename Make>
  void violation(Make&& make) {
    ++violations;
    if (witnesses.size() < kWitnessCap) witnesses.push_back(make());
  }

  void absorb(Sink&& other) {
    instances += other.instances;
    violations += other.violations;
    for (Witness& w : other.witnesses) {
      if (witnesses.size() == kWitnessCap) break;
      witnesses.push_back(std::move(w));
    }
  }

  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
};

inline unsigned resolve_workers(const CheckOptions& options) {
  if (options.workers != 0) return options.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i, sink) for every i in [0, count), one sink per index, handed
// out dynamically to the workers and merged in index order afterwards.
template <typename Body>
Sink run_indexed(std::uint64_t count, unsigned workers, Body&& body) {
  std::vector<Sink> sinks(static_cast<std::size_t>(count));
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) body(i, sinks[static_cast<std::size_t>(i)]);
  };
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
  }
  Sink out;
  for (Sink& s : sinks) out.absorb(std::move(s));
  return out;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for sample i under `seed`.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t i) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(i)));
}

inline void finish(CheckReport& report, Sink&& sink) {
  report.instances += sink.instances;
  report.violations += sink.violations;
  for (Witness& w : sink.witnesses) {
    if (report.witnesses.size() == kWitnessCap) break;
    report.witnesses.push_back(std::move(w));
  }
  report.passed = report.violations == 0;
}

/// "01 < 11", "01 ~ 11" or "11 < 01".
std::string relation_text(const Tpo& t, World x, World y);

}  // namespace itrev::internal
