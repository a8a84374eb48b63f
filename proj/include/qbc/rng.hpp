#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qbc {

/// Seeded random stream with pinned distribution algorithms. mt19937_64
/// supplies the bits; uniform and gaussian mappings are implemented here
/// (53-bit mantissa scaling, Box-Muller) instead of <random>'s
/// distributions, whose output is implementation-defined. Identical seeds
/// give identical streams on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in (0, 1].
  double uniform();
  /// Standard normal via Box-Muller (caches the paired draw).
  double gauss();
  /// Samples an index with the given (normalized) weights by cumulative
  /// inversion.
  std::size_t pick(const std::vector<double>& probs);

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Decorrelated child seed for a (master, stream) pair; splitmix64 finalizer.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace qbc
