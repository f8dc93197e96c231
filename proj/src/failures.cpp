#include "tensordeg/failures.hpp"

#include "tensordeg/hyperdet.hpp"
#include "tensordeg/instances.hpp"

namespace tensordeg {

TensorQ direct_sum(const TensorQ& t, const TensorQ& s) {
  const auto a = t.dims();
  const auto b = s.dims();
  TensorQ out(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
  for (Index k = 0; k < a[2]; ++k) {
    out.slice(k).topLeftCorner(a[0], a[1]) = t.slice(k);
  }
  for (Index k = 0; k < b[2]; ++k) {
    out.slice(a[2] + k).bottomRightCorner(b[0], b[1]) = s.slice(k);
  }
  return out;
}

WitnessQ embed_witness(const WitnessQ& w, const std::array<Index, 3>& offset,
                       const std::array<Index, 3>& dims) {
  auto pad = [](const VectorQ& v, Index at, Index n) {
    if (at < 0 || at + v.size() > n) throw DimensionError("embed_witness: block exceeds the format");
    VectorQ out = VectorQ::Zero(n);
    out.segment(at, v.size()) = v;
    return out;
  };
  return {pad(w.x, offset[0], dims[0]), pad(w.y, offset[1], dims[1]), pad(w.z, offset[2], dims[2])};
}

const char* to_string(DemoTag tag) {
  switch (tag) {
    case DemoTag::direct_sum: return "direct_sum";
    case DemoTag::pairwise: return "pairwise";
    case DemoTag::vandermonde: return "vandermonde";
  }
  return "";
}

namespace {

bool products_vanish(const VectorQ& a, const VectorQ& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (!is_zero(a(i) * b(i))) return false;
  }
  return true;
}

bool weighted_sums_vanish(const VectorQ& a, const VectorQ& b) {
  const Index n = a.size();
  for (Index p = 0; p < n; ++p) {
    Rational sum = 0;
    for (Index i = 0; i < n; ++i) {
      Rational w = 1;
      for (Index e = 0; e < p; ++e) w *= Rational(i + 1);
      sum += w * a(i) * b(i);
    }
    if (!is_zero(sum)) return false;
  }
  return true;
}

std::vector<DemoCheck> support_checks(const FailureDemo& d, bool weighted) {
  if (d.tensors.size() != 1 || d.witnesses.size() != 1) return {{"shape", false}};
  const auto& w = d.witnesses.front();
  const Index n = w.x.size();
  if (w.y.size() != n || w.z.size() != n) return {{"shape", false}};
  std::vector<DemoCheck> out{
      {"vectors_nonzero", !is_zero_vector(w.x) && !is_zero_vector(w.y) && !is_zero_vector(w.z)},
      {"coordinatewise_products_zero",
       products_vanish(w.x, w.y) && products_vanish(w.x, w.z) && products_vanish(w.y, w.z)},
      {"diagonal_tensor_witness",
       d.tensors.front().dims() == std::array<Index, 3>{n, n, n} && verify_tensor_witness(d.tensors.front(), w)},
  };
  if (weighted) {
    out.push_back({"vandermonde_sums_zero", weighted_sums_vanish(w.x, w.y) &&
                                                weighted_sums_vanish(w.x, w.z) &&
                                                weighted_sums_vanish(w.y, w.z)});
  }
  return out;
}

std::vector<DemoCheck> direct_sum_checks(const FailureDemo& d) {
  if (d.tensors.size() != 3 || d.witnesses.size() != 2) return {{"shape", false}};
  const auto& t = d.tensors[0];
  const auto& s = d.tensors[1];
  const auto& sum = d.tensors[2];
  const auto& padded = d.witnesses[1];
  const auto a = t.dims();
  bool t_nondegenerate = false;
  if (hyperdet_supported(Format::of(t))) t_nondegenerate = !is_zero(hyperdet(t).value);
  return {
      {"hyperdet_T_nonzero", t_nondegenerate},
      {"sum_is_direct_sum", sum == direct_sum(t, s)},
      {"S_witness_verifies", verify_tensor_witness(s, d.witnesses[0])},
      {"padded_witness_verifies", verify_tensor_witness(sum, padded)},
      {"padded_support_in_S_block", padded.x.size() == sum.n1() && padded.y.size() == sum.n2() &&
                                        padded.z.size() == sum.n3() &&
                                        is_zero_vector(padded.x.head(a[0])) &&
                                        is_zero_vector(padded.y.head(a[1])) &&
                                        is_zero_vector(padded.z.head(a[2]))},
  };
}

void require_all(const FailureDemo& d) {
  for (const auto& c : d.checks) {
    if (!c.holds) throw DemoRejected(std::string(to_string(d.tag)) + " demo: check '" + c.name + "' fails");
  }
}

FailureDemo support_demo(DemoTag tag, Index n, Index i, Index j, Index k) {
  if (n < 3) throw InvalidInput("support demo needs dimension n >= 3");
  for (Index idx : {i, j, k}) {
    if (idx < 0 || idx >= n) throw InvalidInput("support demo index out of range");
  }
  TensorQ diag(n, n, n);
  for (Index a = 0; a < n; ++a) diag(a, a, a) = 1;
  FailureDemo d{tag, {std::move(diag)}, {WitnessQ{VectorQ::Unit(n, i), VectorQ::Unit(n, j), VectorQ::Unit(n, k)}}, {}};
  d.checks = recompute_checks(d);
  require_all(d);
  return d;
}

}  // namespace

std::vector<DemoCheck> recompute_checks(const FailureDemo& demo) {
  switch (demo.tag) {
    case DemoTag::direct_sum: return direct_sum_checks(demo);
    case DemoTag::pairwise: return support_checks(demo, false);
    case DemoTag::vandermonde: return support_checks(demo, true);
  }
  return {};
}

bool reverify(const FailureDemo& demo) {
  const auto again = recompute_checks(demo);
  if (again.size() != demo.checks.size() || again.empty()) return false;
  for (std::size_t i = 0; i < again.size(); ++i) {
    if (again[i].name != demo.checks[i].name || !again[i].holds || !demo.checks[i].holds) return false;
  }
  return true;
}

FailureDemo demo_direct_sum_failure(std::uint64_t seed) {
  const Format f(3, 2, 2);
  Rng rng(Rng::derive(seed, 0));
  TensorQ t = random_integer_tensor(f, 3, rng);
  while (is_zero(hyperdet(t).value)) t = random_integer_tensor(f, 3, rng);
  auto sample = degenerate_generator(f, Rng::derive(seed, 1));
  TensorQ sum = direct_sum(t, sample.tensor);
  WitnessQ padded = embed_witness(sample.witness, t.dims(), sum.dims());
  FailureDemo d{DemoTag::direct_sum,
                {std::move(t), std::move(sample.tensor), std::move(sum)},
                {std::move(sample.witness), std::move(padded)},
                {}};
  d.checks = recompute_checks(d);
  require_all(d);
  return d;
}

FailureDemo demo_disjoint_support(Index n, Index i, Index j, Index k) {
  return support_demo(DemoTag::pairwise, n, i, j, k);
}

FailureDemo demo_vandermonde_failure(Index n, Index i, Index j, Index k) {
  return support_demo(DemoTag::vandermonde, n, i, j, k);
}

}  // namespace tensordeg
