#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tensordeg/random.hpp"
#include "tensordeg/tensor.hpp"

namespace tensordeg {

/// Tensor format n1 x n2 x n3, all dimensions >= 1.
class Format {
 public:
  Format(Index n1, Index n2, Index n3);
  explicit Format(const std::array<Index, 3>& dims) : Format(dims[0], dims[1], dims[2]) {}

  template <typename Scalar>
  static Format of(const Tensor3<Scalar>& t) {
    return Format(t.dims());
  }
  /// "3,2,2" or "3x2x2".
  static Format parse(const std::string& text);

  Index operator[](std::size_t mode) const { return dims_[mode]; }
  const std::array<Index, 3>& dims() const { return dims_; }
  Index k(std::size_t mode) const { return dims_[mode] - 1; }
  Index cells() const { return dims_[0] * dims_[1] * dims_[2]; }
  Format permuted(const ModePermutation& perm) const;
  std::string str() const;

  friend bool operator==(const Format&, const Format&) = default;

 private:
  std::array<Index, 3> dims_;
};

struct UnsupportedFormat : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Permutation moving a largest mode first (ties keep the first, the other
/// two modes keep their order) when the result satisfies n0 = n1 + n2 - 1;
/// nullopt when the format is not boundary.
std::optional<ModePermutation> boundary_permutation(const Format& f);

enum class HyperdetMethod { matrix_determinant, resultant_322 };

const char* to_string(HyperdetMethod m);

struct HyperdetResult {
  Rational value;
  HyperdetMethod method;
  /// Format after applying `permutation`.
  Format format_used;
  ModePermutation permutation;
};

/// (n, n, 1) up to permutation with n <= 8, and (3, 2, 2) up to permutation.
bool hyperdet_supported(const Format& f);

/// Determinant of the single slice of an (n, n, 1) tensor (up to mode
/// permutation). Throws UnsupportedFormat otherwise.
HyperdetResult hyperdet_matrix(const TensorQ& t);

/// The 6 x 6 elimination matrix of a (3, 2, 2) tensor: the three bilinear
/// forms f_i(y, z) = T(e_i, y, z) multiplied by y_0 and y_1, written in the
/// six monomials y^a z_k of bidegree (2, 1). Row 2i + m holds y_m f_i;
/// column 2a + k holds the monomial y_0^(2-a) y_1^a z_k. Every entry is a
/// single tensor entry or zero.
MatrixQ elimination_matrix_322(const TensorQ& t);

/// Determinant of elimination_matrix_322 after permuting the size-3 mode
/// first. It vanishes exactly when the forms f_i share a nontrivial common
/// zero. Throws UnsupportedFormat for other formats.
HyperdetResult hyperdet_322(const TensorQ& t);

/// Dispatches on the format. Throws UnsupportedFormat.
HyperdetResult hyperdet(const TensorQ& t);

/// Homogeneity degree d with value(c T) = c^d value(T), measured on random
/// probe tensors and cross-checked on a second probe.
int hyperdet_degree(const Format& f, std::uint64_t seed = 0x5eed);

struct DegenerateSample {
  TensorQ tensor;
  WitnessQ witness;
};

/// Random tensor for which `witness` certifies degeneracy: a random integer
/// point of the solution space of the (linear in T) degeneracy equations.
/// Resamples zero points unless the solution space is trivial.
TensorQ degenerate_from_witness(const Format& f, const WitnessQ& witness, Rng& rng);

/// Random nonzero integer witness (entries in [-3, 3]) and a degenerate
/// tensor it certifies.
DegenerateSample degenerate_generator(const Format& f, std::uint64_t seed);

TensorQ random_integer_tensor(const Format& f, std::int64_t bound, Rng& rng);

}  // namespace tensordeg
