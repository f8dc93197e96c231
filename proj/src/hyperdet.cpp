#include "tensordeg/hyperdet.hpp"

#include <algorithm>
#include <sstream>

#include "tensordeg/linalg.hpp"

namespace tensordeg {

Format::Format(Index n1, Index n2, Index n3) : dims_{n1, n2, n3} {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw DimensionError("format dimensions must be positive");
}

Format Format::parse(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), 'x', ',');
  std::istringstream in(s);
  std::array<Index, 3> d{};
  std::string part;
  std::size_t count = 0;
  while (std::getline(in, part, ',')) {
    if (count == 3) throw InvalidInput("format needs exactly three dimensions: '" + text + "'");
    try {
      std::size_t used = 0;
      d[count] = std::stol(part, &used);
      if (used != part.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("malformed format '" + text + "'");
    }
    ++count;
  }
  if (count != 3) throw InvalidInput("format needs exactly three dimensions: '" + text + "'");
  return Format(d);
}

Format Format::permuted(const ModePermutation& perm) const {
  return Format(dims_[static_cast<std::size_t>(perm[0])], dims_[static_cast<std::size_t>(perm[1])],
                dims_[static_cast<std::size_t>(perm[2])]);
}

std::string Format::str() const {
  return std::to_string(dims_[0]) + "x" + std::to_string(dims_[1]) + "x" + std::to_string(dims_[2]);
}

std::optional<ModePermutation> boundary_permutation(const Format& f) {
  int first = 0;
  for (int m = 1; m < 3; ++m) {
    if (f[static_cast<std::size_t>(m)] > f[static_cast<std::size_t>(first)]) first = m;
  }
  ModePermutation perm{first, 0, 0};
  int slot = 1;
  for (int m = 0; m < 3; ++m) {
    if (m != first) perm[static_cast<std::size_t>(slot++)] = m;
  }
  const Format p = f.permuted(perm);
  if (p[0] != p[1] + p[2] - 1) return std::nullopt;
  return perm;
}

const char* to_string(HyperdetMethod m) {
  switch (m) {
    case HyperdetMethod::matrix_determinant: return "matrix_determinant";
    case HyperdetMethod::resultant_322: return "resultant_322";
  }
  return "";
}

namespace {

bool is_matrix_format(const Format& p) {
  // p is already in boundary order (largest first).
  return (p[1] == p[0] && p[2] == 1) || (p[2] == p[0] && p[1] == 1);
}

}  // namespace

bool hyperdet_supported(const Format& f) {
  const auto perm = boundary_permutation(f);
  if (!perm) return false;
  const Format p = f.permuted(*perm);
  if (is_matrix_format(p)) return p[0] <= 8;
  return p == Format(3, 2, 2);
}

HyperdetResult hyperdet_matrix(const TensorQ& t) {
  const Format f = Format::of(t);
  const auto perm = boundary_permutation(f);
  if (!perm || !is_matrix_format(f.permuted(*perm)) || f.permuted(*perm)[0] > 8) {
    throw UnsupportedFormat("hyperdet_matrix: format " + f.str() + " is not (n,n,1) with n <= 8");
  }
  const TensorQ p = permute_modes(t, *perm);
  const Index n = p.n1();
  MatrixQ m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m(i, j) = p.n3() == 1 ? p(i, j, 0) : p(i, 0, j);
  }
  return {det_exact(m), HyperdetMethod::matrix_determinant, Format::of(p), *perm};
}

MatrixQ elimination_matrix_322(const TensorQ& t) {
  if (Format::of(t) != Format(3, 2, 2)) {
    throw UnsupportedFormat("elimination_matrix_322: tensor must have format 3x2x2");
  }
  MatrixQ e = MatrixQ::Zero(6, 6);
  for (Index i = 0; i < 3; ++i) {
    for (Index m = 0; m < 2; ++m) {
      for (Index j = 0; j < 2; ++j) {
        for (Index k = 0; k < 2; ++k) e(2 * i + m, 2 * (j + m) + k) = t(i, j, k);
      }
    }
  }
  return e;
}

HyperdetResult hyperdet_322(const TensorQ& t) {
  const Format f = Format::of(t);
  const auto perm = boundary_permutation(f);
  if (!perm || f.permuted(*perm) != Format(3, 2, 2)) {
    throw UnsupportedFormat("hyperdet_322: format " + f.str() + " is not 3x2x2 up to permutation");
  }
  const TensorQ p = permute_modes(t, *perm);
  return {det_exact(elimination_matrix_322(p)), HyperdetMethod::resultant_322, Format(3, 2, 2), *perm};
}

HyperdetResult hyperdet(const TensorQ& t) {
  const Format f = Format::of(t);
  if (!hyperdet_supported(f)) {
    throw UnsupportedFormat("no exact hyperdeterminant evaluator for format " + f.str());
  }
  const Format p = f.permuted(*boundary_permutation(f));
  return is_matrix_format(p) ? hyperdet_matrix(t) : hyperdet_322(t);
}

int hyperdet_degree(const Format& f, std::uint64_t seed) {
  if (!hyperdet_supported(f)) {
    throw UnsupportedFormat("hyperdet_degree: unsupported format " + f.str());
  }
  Rng rng(seed);
  auto measure = [&]() {
    TensorQ t = random_integer_tensor(f, 3, rng);
    Rational v = hyperdet(t).value;
    for (int attempt = 0; attempt < 1000 && is_zero(v); ++attempt) {
      t = random_integer_tensor(f, 3, rng);
      v = hyperdet(t).value;
    }
    if (is_zero(v)) throw std::logic_error("hyperdet_degree: no probe with a nonzero value");
    const Rational ratio = hyperdet(t.scaled(2)).value / v;
    Rational power = 1;
    int d = 0;
    while (power < ratio && d < 256) {
      power *= 2;
      ++d;
    }
    if (power != ratio) throw std::logic_error("hyperdet_degree: value(2T)/value(T) is not a power of 2");
    Rational three = 1;
    for (int i = 0; i < d; ++i) three *= 3;
    if (hyperdet(t.scaled(3)).value != three * v) {
      throw std::logic_error("hyperdet_degree: scaling by 3 disagrees with degree " + std::to_string(d));
    }
    return d;
  };
  const int d1 = measure();
  const int d2 = measure();
  if (d1 != d2) {
    throw std::logic_error("hyperdet_degree: probes disagree (" + std::to_string(d1) + " vs " +
                           std::to_string(d2) + ")");
  }
  return d1;
}

TensorQ degenerate_from_witness(const Format& f, const WitnessQ& w, Rng& rng) {
  const Index n1 = f[0], n2 = f[1], n3 = f[2];
  detail::require_length(w.x.size(), n1, "witness x");
  detail::require_length(w.y.size(), n2, "witness y");
  detail::require_length(w.z.size(), n3, "witness z");
  // Unknown T(i,j,k) sits at column i + n1 (j + n2 k).
  const Index unknowns = f.cells();
  MatrixQ sys = MatrixQ::Zero(n3 + n2 + n1, unknowns);
  for (Index i = 0; i < n1; ++i) {
    for (Index j = 0; j < n2; ++j) {
      for (Index k = 0; k < n3; ++k) {
        const Index col = i + n1 * (j + n2 * k);
        sys(k, col) = w.x(i) * w.y(j);            // T(x, y, .)_k
        sys(n3 + j, col) = w.x(i) * w.z(k);       // T(x, ., z)_j
        sys(n3 + n2 + i, col) = w.y(j) * w.z(k);  // T(., y, z)_i
      }
    }
  }
  const auto basis = kernel_basis(sys);
  TensorQ t = TensorQ::zero(f.dims());
  if (basis.empty()) return t;
  VectorQ point;
  do {
    point = VectorQ::Zero(unknowns);
    for (const auto& b : basis) point += Rational(rng.uniform_int(-3, 3)) * b;
  } while (is_zero_vector(point));
  for (Index l = 0; l < unknowns; ++l) t.flat(l) = point(l);
  return t;
}

DegenerateSample degenerate_generator(const Format& f, std::uint64_t seed) {
  Rng rng(seed);
  WitnessQ w{rng.nonzero_integer_vector(f[0], 3), rng.nonzero_integer_vector(f[1], 3),
             rng.nonzero_integer_vector(f[2], 3)};
  TensorQ t = degenerate_from_witness(f, w, rng);
  return {std::move(t), std::move(w)};
}

TensorQ random_integer_tensor(const Format& f, std::int64_t bound, Rng& rng) {
  TensorQ t = TensorQ::zero(f.dims());
  for (Index l = 0; l < f.cells(); ++l) t.flat(l) = rng.uniform_int(-bound, bound);
  return t;
}

}  // namespace tensordeg
