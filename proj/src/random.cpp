#include "tensordeg/random.hpp"

namespace tensordeg {

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidInput("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(bits());
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t v;
  do {
    v = bits();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

double Rng::symmetric_unit() {
  const double u = static_cast<double>(bits() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

VectorQ Rng::nonzero_integer_vector(Index n, std::int64_t bound) {
  VectorQ v(n);
  do {
    for (Index i = 0; i < n; ++i) v(i) = uniform_int(-bound, bound);
  } while (is_zero_vector(v));
  return v;
}

MatrixQ Rng::integer_matrix(Index rows, Index cols, std::int64_t bound) {
  MatrixQ m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = uniform_int(-bound, bound);
  }
  return m;
}

}  // namespace tensordeg
