#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "tensordeg/failures.hpp"
#include "tensordeg/hyperdet.hpp"
#include "tensordeg/instances.hpp"

using namespace tensordeg;
using testing::unit;

namespace {

bool check(const FailureDemo& d, const std::string& name) {
  for (const auto& c : d.checks) {
    if (c.name == name) return c.holds;
  }
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("direct sum", "[failures][direct_sum]") {
  Rng rng(1);
  const TensorQ t = random_integer_tensor(Format(2, 2, 2), 3, rng);
  const TensorQ s = random_integer_tensor(Format(2, 2, 2), 3, rng);
  const TensorQ sum = direct_sum(t, s);
  CHECK(sum.dims() == std::array<Index, 3>{4, 4, 4});
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      for (Index k = 0; k < 4; ++k) {
        const bool lead = i < 2 && j < 2 && k < 2, trail = i >= 2 && j >= 2 && k >= 2;
        const Rational want = lead ? t(i, j, k) : trail ? s(i - 2, j - 2, k - 2) : Rational(0);
        REQUIRE(sum(i, j, k) == want);
      }

  // Anything plus a zero block is degenerate through that block.
  const TensorQ padded = direct_sum(random_integer_tensor(Format(3, 2, 2), 3, rng), TensorQ(1, 1, 1));
  CHECK(verify_tensor_witness(padded, WitnessQ{unit(4, 3), unit(3, 2), unit(3, 2)}));

  const TensorQ mixed = direct_sum(TensorQ(2, 3, 1), TensorQ(1, 2, 4));
  CHECK(mixed.dims() == std::array<Index, 3>{3, 5, 5});

  const WitnessQ w{testing::vec({1, 2}), testing::vec({3}), testing::vec({4, 5})};
  const WitnessQ e = embed_witness(w, {1, 0, 2}, {4, 2, 4});
  CHECK(e.x == testing::vec({0, 1, 2, 0}));
  CHECK(e.y == testing::vec({3, 0}));
  CHECK(e.z == testing::vec({0, 0, 4, 5}));
  CHECK_THROWS_AS(embed_witness(w, {3, 0, 0}, {4, 2, 4}), DimensionError);
}

TEST_CASE("both blocks degenerate gives two padded witnesses", "[failures][direct_sum]") {
  const auto a = degenerate_generator(Format(3, 2, 2), 1);
  const auto b = degenerate_generator(Format(2, 2, 2), 2);
  const TensorQ sum = direct_sum(a.tensor, b.tensor);
  CHECK(verify_tensor_witness(sum, embed_witness(a.witness, {0, 0, 0}, sum.dims())));
  CHECK(verify_tensor_witness(sum, embed_witness(b.witness, {3, 2, 2}, sum.dims())));
}

TEST_CASE("direct sum demo", "[failures][direct_sum]") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto d = demo_direct_sum_failure(seed);
    REQUIRE(d.tag == DemoTag::direct_sum);
    REQUIRE(d.tensors.size() == 3);
    REQUIRE(d.witnesses.size() == 2);
    REQUIRE(reverify(d));
    // Checked again here without the library's own check list.
    const TensorQ& t = d.tensors[0];
    const TensorQ& s = d.tensors[1];
    REQUIRE(hyperdet(t).value != 0);
    REQUIRE(d.tensors[2] == direct_sum(t, s));
    REQUIRE(verify_tensor_witness(s, d.witnesses[0]));
    const WitnessQ& w = d.witnesses[1];
    REQUIRE(verify_tensor_witness(d.tensors[2], w));
    REQUIRE(is_zero_vector(VectorQ(w.x.head(t.n1()))));
    REQUIRE(is_zero_vector(VectorQ(w.y.head(t.n2()))));
    REQUIRE(is_zero_vector(VectorQ(w.z.head(t.n3()))));
    REQUIRE(check(d, "padded_support_in_S_block"));
  }
  CHECK(demo_direct_sum_failure(4).tensors == demo_direct_sum_failure(4).tensors);
}

TEST_CASE("disjoint support demo", "[failures][pairwise]") {
  for (Index n = 3; n <= 5; ++n) {
    const auto d = demo_disjoint_support(n);
    REQUIRE(reverify(d));
    const WitnessQ& w = d.witnesses.at(0);
    REQUIRE(w.x == unit(n, 0));
    REQUIRE(w.y == unit(n, 1));
    REQUIRE(w.z == unit(n, 2));
    for (Index a = 0; a < n; ++a) {
      REQUIRE(w.x(a) * w.y(a) == 0);
      REQUIRE(w.x(a) * w.z(a) == 0);
      REQUIRE(w.y(a) * w.z(a) == 0);
    }
    REQUIRE(verify_tensor_witness(d.tensors.at(0), w));
    REQUIRE(check(d, "coordinatewise_products_zero"));
  }
  CHECK_THROWS_AS(demo_disjoint_support(2), InvalidInput);
  CHECK_THROWS_AS(demo_disjoint_support(3, 0, 1, 3), InvalidInput);
  CHECK_THROWS_AS(demo_disjoint_support(3, 0, 1, 0), DemoRejected);
}

TEST_CASE("Vandermonde demo", "[failures][vandermonde]") {
  for (Index n = 3; n <= 5; ++n) {
    const auto d = demo_vandermonde_failure(n);
    REQUIRE(d.tag == DemoTag::vandermonde);
    REQUIRE(reverify(d));
    REQUIRE(check(d, "vandermonde_sums_zero"));
  }
  const auto d = demo_vandermonde_failure(4, 0, 2, 3);
  CHECK(reverify(d));
  CHECK(d.witnesses.at(0).y == unit(4, 2));
  CHECK_THROWS_AS(demo_vandermonde_failure(2), InvalidInput);
  // z = e_i overlaps x = e_i: x_i z_i = 1.
  CHECK_THROWS_AS(demo_vandermonde_failure(4, 0, 2, 0), DemoRejected);
}

TEST_CASE("tampered demos fail re-verification", "[failures]") {
  auto d = demo_direct_sum_failure(3);
  d.witnesses[1].x(0) = 1;
  CHECK_FALSE(reverify(d));
  auto e = demo_disjoint_support(3);
  e.witnesses[0].z = unit(3, 0);
  CHECK_FALSE(reverify(e));
  auto f = demo_vandermonde_failure(3);
  f.checks.push_back({"extra", true});
  CHECK_FALSE(reverify(f));
}
