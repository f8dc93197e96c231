#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tensordeg/tensor.hpp"

namespace tensordeg {

/// Block tensor of format (n1 + m1, n2 + m2, n3 + m3): t on the leading
/// block, s on the trailing block, zeros elsewhere.
TensorQ direct_sum(const TensorQ& t, const TensorQ& s);

/// Witness of a block at `offset` inside a tensor of format `dims`,
/// padded with zeros.
WitnessQ embed_witness(const WitnessQ& w, const std::array<Index, 3>& offset,
                       const std::array<Index, 3>& dims);

enum class DemoTag { direct_sum, pairwise, vandermonde };

const char* to_string(DemoTag tag);

struct DemoCheck {
  std::string name;
  bool holds = false;
};

/// A counterexample to a deterministic embedding, with the conclusions it
/// asserts. Every check is recomputed from `tensors` and `witnesses`.
struct FailureDemo {
  DemoTag tag = DemoTag::direct_sum;
  std::vector<TensorQ> tensors;
  std::vector<WitnessQ> witnesses;
  std::vector<DemoCheck> checks;
};

/// Raised when a construction fails its own asserted conclusion.
struct DemoRejected : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Recomputes the checks of `demo` from its data.
std::vector<DemoCheck> recompute_checks(const FailureDemo& demo);

/// True iff the recomputed checks all hold and match the stored ones.
bool reverify(const FailureDemo& demo);

/// tensors = {T, S, T (+) S}, witnesses = {w_S, padded w_S}. T is a random
/// 3x2x2 integer tensor with nonzero hyperdeterminant and S a generated
/// degenerate 3x2x2 tensor: the sum is degenerate through the S block alone.
FailureDemo demo_direct_sum_failure(std::uint64_t seed);

/// x = e_i, y = e_j, z = e_k (0-based, pairwise distinct) in R^n: every
/// coordinatewise product vanishes, so the diagonal tensor sum_a e_a (x) e_a (x) e_a
/// (tensors[0]) is degenerate. Throws InvalidInput when n < 3 or an index is
/// out of range, DemoRejected when the supports overlap.
FailureDemo demo_disjoint_support(Index n, Index i = 0, Index j = 1, Index k = 2);

/// demo_disjoint_support plus the weighted sums sum_a w_a^p x_a y_a (and the
/// x z, y z analogues) for w_a = a + 1 and p = 0, ..., n - 1.
FailureDemo demo_vandermonde_failure(Index n, Index i = 0, Index j = 1, Index k = 2);

}  // namespace tensordeg
