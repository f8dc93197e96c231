#pragma once

#include <cstdint>
#include <random>

#include "tensordeg/linalg.hpp"

namespace tensordeg {

/// Seeded generator with platform-independent draws: std::mt19937_64 bits,
/// mapped to ranges without the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Seed for the index-th independent substream of `master`.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

  std::uint64_t bits() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform double in [-1, 1).
  double symmetric_unit();

  /// Vector with integer entries in [-bound, bound], not all zero.
  VectorQ nonzero_integer_vector(Index n, std::int64_t bound);

  MatrixQ integer_matrix(Index rows, Index cols, std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tensordeg
