#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"
#include "tensordeg/degeneracy.hpp"
#include "tensordeg/hyperdet.hpp"

using namespace tensordeg;
using testing::mat;

namespace {

// A 3x2x2 tensor is degenerate iff the 3-plane spanned by its slices
// T(i,:,:) in the space of 2x2 matrices is tangent to the quadric det = 0.
// The plane is the kernel of a covector n (signed 3x3 minors of the 3x4
// flattening), and tangency is n0 n3 - n1 n2 = 0.
Rational dual_quadric_oracle(const TensorQ& t) {
  MatrixQ f(3, 4);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k) f(i, 2 * j + k) = t(i, j, k);
  Rational n[4];
  for (Index c = 0; c < 4; ++c) {
    MatrixQ m(3, 3);
    Index at = 0;
    for (Index d = 0; d < 4; ++d)
      if (d != c) m.col(at++) = f.col(d);
    n[c] = oracle::cofactor_det(m) * (c % 2 ? -1 : 1);
  }
  return n[0] * n[3] - n[1] * n[2];
}

TensorQ reference_322() {
  const int primes[12] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  TensorQ t(3, 2, 2);
  for (Index l = 0; l < 12; ++l) t.flat(l) = primes[l];
  return t;
}

Rational power(const Rational& c, int d) {
  Rational out = 1;
  for (int i = 0; i < d; ++i) out *= c;
  return out;
}

}  // namespace

TEST_CASE("format parsing and boundary permutation", "[hyperdet][format]") {
  CHECK(Format::parse("3,2,2") == Format(3, 2, 2));
  CHECK(Format::parse("3x2x2") == Format(3, 2, 2));
  CHECK(Format(3, 2, 2).k(0) == 2);
  CHECK_THROWS_AS(Format::parse("3,2"), InvalidInput);
  CHECK_THROWS_AS(Format(0, 1, 1), DimensionError);

  CHECK(boundary_permutation(Format(3, 2, 2)) == ModePermutation{0, 1, 2});
  CHECK_FALSE(boundary_permutation(Format(2, 2, 2)).has_value());
  const auto p = boundary_permutation(Format(2, 3, 2));
  REQUIRE(p.has_value());
  CHECK(Format(2, 3, 2).permuted(*p) == Format(3, 2, 2));
  CHECK(Format(2, 2, 3).permuted(*boundary_permutation(Format(2, 2, 3))) == Format(3, 2, 2));
  CHECK(boundary_permutation(Format(4, 4, 1)).has_value());
  CHECK(boundary_permutation(Format(1, 4, 4)).has_value());
  CHECK(boundary_permutation(Format(4, 3, 2)).has_value());
  CHECK_FALSE(boundary_permutation(Format(4, 2, 2)).has_value());
}

TEST_CASE("matrix format hyperdeterminant", "[hyperdet][matrix]") {
  CHECK(hyperdet_matrix(TensorQ({MatrixQ::Identity(3, 3)})).value == 1);
  CHECK(hyperdet_matrix(TensorQ({mat({{1, 2}, {3, 4}})})).value == -2);
  const TensorQ singular({mat({{1, 2}, {2, 4}})});
  CHECK(hyperdet_matrix(singular).value == 0);
  const auto v = decide(singular, SearchConfig{});
  CHECK(v.outcome == Outcome::feasible_certified);
  CHECK(recheck(singular, v));
  CHECK_THROWS_AS(hyperdet_matrix(TensorQ(2, 3, 1)), UnsupportedFormat);

  // (1, n, n) and (n, 1, n) are the same matrix seen along another mode.
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.uniform_int(1, 5);
    const MatrixQ m = rng.integer_matrix(n, n, 3);
    const TensorQ t({m});
    REQUIRE(hyperdet(t).value == oracle::cofactor_det(m));
    REQUIRE(hyperdet(permute_modes(t, {2, 0, 1})).value == oracle::cofactor_det(m));
    REQUIRE(hyperdet(permute_modes(t, {0, 2, 1})).value == oracle::cofactor_det(m));
  }
}

TEST_CASE("3x2x2 reference fixture and independent oracle", "[hyperdet][322][oracle]") {
  const TensorQ ref = reference_322();
  const auto r = hyperdet_322(ref);
  CHECK(r.value == 6656);
  CHECK(r.method == HyperdetMethod::resultant_322);
  CHECK(dual_quadric_oracle(ref) == 6656);

  Rng rng(322);
  for (int trial = 0; trial < 300; ++trial) {
    const TensorQ t = random_integer_tensor(Format(3, 2, 2), 3, rng);
    REQUIRE(hyperdet_322(t).value == dual_quadric_oracle(t));
  }
  CHECK_THROWS_AS(hyperdet_322(TensorQ(2, 2, 2)), UnsupportedFormat);
  CHECK_THROWS_AS(hyperdet(TensorQ(2, 2, 2)), UnsupportedFormat);
}

TEST_CASE("3x2x2 under mode permutations", "[hyperdet][322]") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TensorQ t = random_integer_tensor(Format(3, 2, 2), 3, rng);
    const Rational v = hyperdet_322(t).value;
    // Swapping the two size-2 modes keeps the sign.
    REQUIRE(hyperdet_322(permute_modes(t, {0, 2, 1})).value == v);
    for (const ModePermutation& p : {ModePermutation{1, 0, 2}, ModePermutation{1, 2, 0}}) {
      const TensorQ s = permute_modes(t, p);
      const auto res = hyperdet(s);
      REQUIRE(res.format_used == Format(3, 2, 2));
      REQUIRE((res.value == v || res.value == -v));
    }
  }
}

TEST_CASE("elimination matrix entries are multilinear in the tensor", "[hyperdet][322]") {
  // Every entry is a linear function of the tensor: E(aT + bS) = aE(T) + bE(S),
  // and each entry depends on at most one tensor entry.
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const TensorQ t = random_integer_tensor(Format(3, 2, 2), 5, rng);
    const TensorQ s = random_integer_tensor(Format(3, 2, 2), 5, rng);
    const Rational a(rng.uniform_int(-4, 4), rng.uniform_int(1, 3)), b(rng.uniform_int(-4, 4), 1);
    TensorQ mix(3, 2, 2);
    for (Index l = 0; l < 12; ++l) mix.flat(l) = a * t.flat(l) + b * s.flat(l);
    REQUIRE(elimination_matrix_322(mix) == MatrixQ(a * elimination_matrix_322(t) + b * elimination_matrix_322(s)));
  }
  for (Index l = 0; l < 12; ++l) {
    TensorQ e(3, 2, 2);
    e.flat(l) = 1;
    const MatrixQ m = elimination_matrix_322(e);
    Index ones = 0;
    for (Index i = 0; i < 6; ++i)
      for (Index j = 0; j < 6; ++j) {
        REQUIRE((m(i, j) == 0 || m(i, j) == 1));
        ones += m(i, j) == 1 ? 1 : 0;
      }
    CHECK(ones == 2);  // once as y_0 f_i and once as y_1 f_i
  }
}

TEST_CASE("homogeneity degree", "[hyperdet][degree]") {
  for (Index n = 1; n <= 5; ++n) CHECK(hyperdet_degree(Format(n, n, 1)) == n);
  CHECK(hyperdet_degree(Format(2, 2, 1)) == 2);
  CHECK(hyperdet_degree(Format(3, 2, 2)) == 6);
  CHECK(hyperdet_degree(Format(2, 2, 3)) == 6);
  for (std::uint64_t s = 1; s <= 10; ++s) CHECK(hyperdet_degree(Format(3, 2, 2), s) == 6);
  CHECK_THROWS_AS(hyperdet_degree(Format(2, 2, 2)), UnsupportedFormat);

  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const TensorQ t = random_integer_tensor(Format(3, 2, 2), 3, rng);
    const Rational v = hyperdet(t).value;
    for (const Rational c : {Rational(-1), Rational(2), Rational(3), Rational(1, 2)}) {
      REQUIRE(hyperdet(t.scaled(c)).value == power(c, 6) * v);
    }
  }
}

TEST_CASE("degenerate generator", "[hyperdet][generator]") {
  for (const Format f : {Format(3, 2, 2), Format(2, 2, 2), Format(1, 1, 1), Format(4, 3, 2), Format(2, 3, 1)}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto s = degenerate_generator(f, seed);
      REQUIRE(Format::of(s.tensor) == f);
      REQUIRE(verify_tensor_witness(s.tensor, s.witness));
      if (hyperdet_supported(f)) REQUIRE(hyperdet(s.tensor).value == 0);
    }
  }
  // Same seed, same sample.
  CHECK(degenerate_generator(Format(3, 2, 2), 5).tensor == degenerate_generator(Format(3, 2, 2), 5).tensor);

  // With witness (e_1, e_1, e_1) the constraints select coordinates: T(0,0,k),
  // T(0,j,0) and T(i,0,0) must vanish.
  Rng rng(1);
  const WitnessQ w{testing::unit(3, 0), testing::unit(2, 0), testing::unit(2, 0)};
  for (int trial = 0; trial < 20; ++trial) {
    const TensorQ t = degenerate_from_witness(Format(3, 2, 2), w, rng);
    REQUIRE_FALSE(t.is_zero());
    for (Index k = 0; k < 2; ++k) REQUIRE(t(0, 0, k) == 0);
    for (Index j = 0; j < 2; ++j) REQUIRE(t(0, j, 0) == 0);
    for (Index i = 0; i < 3; ++i) REQUIRE(t(i, 0, 0) == 0);
  }
  // The zero tensor solves every such system.
  CHECK(verify_tensor_witness(TensorQ(3, 2, 2), w));
}
