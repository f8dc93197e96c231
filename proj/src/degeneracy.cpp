#include "tensordeg/degeneracy.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "tensordeg/io.hpp"
#include "tensordeg/random.hpp"

namespace tensordeg {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::feasible_certified: return "feasible_certified";
    case Outcome::infeasible_certified: return "infeasible_certified";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

void SearchConfig::validate() const {
  if (restarts < 1 || max_iterations < 1 || !(tolerance > 0.0) || denominator_bound < 1) {
    throw InvalidInput("search configuration bounds must be positive");
  }
}

namespace {

using QN = QuadraticNumber;

Verdict feasible(Certificate witness, std::string method) {
  return {Outcome::feasible_certified, std::move(witness), std::move(method), {}};
}

Vector<QN> vec2(const QN& a, const QN& b) {
  Vector<QN> v(2);
  v << a, b;
  return v;
}

// Common real root of polynomials of degree <= 2, as an exact number.
// `g` is their monic gcd with at least one real root.
QN real_root(const UniPoly& g) {
  if (g.degree() == 1) return QN(-g.coeff(0));
  // t^2 + p t + q: (-p + sqrt(p^2 - 4q)) / 2
  const Rational p = g.coeff(1);
  const Rational q = g.coeff(0);
  return (QN(-p) + QN::sqrt_of(p * p - 4 * q)) / QN(2);
}

struct ChartOutcome {
  SturmChart chart;
  std::optional<QN> root;  // common root (any value when all vanish)
};

ChartOutcome analyze_chart(std::string name, std::vector<UniPoly> polys) {
  ChartOutcome out;
  out.chart.chart = std::move(name);
  out.chart.polynomials = std::move(polys);
  UniPoly g;
  for (const auto& p : out.chart.polynomials) {
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : gcd_poly(g, p);
  }
  if (g.is_zero()) {
    // Every polynomial vanishes identically: any parameter value works.
    out.chart.real_roots = -1;
    out.root = QN(0);
    return out;
  }
  out.chart.gcd = g;
  out.chart.real_roots =
      g.degree() == 0 ? 0 : sturm_root_count(g, Endpoint::neg_infinity(), Endpoint::pos_infinity());
  // Roots of higher degree are not represented exactly.
  if (out.chart.real_roots > 0 && g.degree() <= 2) out.root = real_root(g);
  return out;
}

// Chart polynomials of a two-dimensional quadratic system.
std::vector<UniPoly> quadratic_chart(const QuadraticInstance& q, bool affine) {
  std::vector<UniPoly> out;
  for (const auto& f : q.forms()) {
    if (affine) {
      out.push_back(UniPoly({f(0, 0), 2 * f(0, 1), f(1, 1)}));  // (1, t)
    } else {
      out.push_back(UniPoly({f(1, 1)}));  // (0, 1)
    }
  }
  return out;
}

// Rows x^T M_l as pairs of polynomials in t for x = (1, t), or constants for x = (0, 1).
std::vector<std::array<UniPoly, 2>> bilinear_rows(const BilinearInstance& b, bool affine) {
  std::vector<std::array<UniPoly, 2>> rows;
  for (const auto& m : b.matrices()) {
    if (affine) {
      rows.push_back({UniPoly({m(0, 0), m(1, 0)}), UniPoly({m(0, 1), m(1, 1)})});
    } else {
      rows.push_back({UniPoly({m(1, 0)}), UniPoly({m(1, 1)})});
    }
  }
  return rows;
}

std::vector<UniPoly> row_minors(const std::vector<std::array<UniPoly, 2>>& rows) {
  std::vector<UniPoly> out;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      out.push_back(rows[a][0] * rows[b][1] - rows[a][1] * rows[b][0]);
    }
  }
  return out;
}

QN evaluate(const UniPoly& p, const QN& t) {
  QN acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * t + QN(p.coeff(i));
  return acc;
}

}  // namespace

Verdict decide_quadratic_m1(const MatrixQ& q) {
  const auto cd = congruence_diagonalize(q);
  const Index n = q.rows();
  Index pos = -1, neg = -1;
  for (Index k = 0; k < n; ++k) {
    const int s = sign(cd.diagonal(k));
    if (s == 0) {
      // Isotropic column of the congruence basis.
      return feasible(WitnessQ{cd.basis.col(k), {}, {}}, "singular_form");
    }
    if (s > 0 && pos < 0) pos = k;
    if (s < 0 && neg < 0) neg = k;
  }
  if (pos < 0 || neg < 0) {
    const auto kind = pos >= 0 ? Definiteness::positive_definite : Definiteness::negative_definite;
    return {Outcome::infeasible_certified, DefinitenessCertificate{0, kind, cd}, "definite_form", {}};
  }
  // The basis columns a, b are q-orthogonal, so (a + s b)^T q (a + s b) = d_a + s^2 d_b.
  const QN s = QN::sqrt_of(-cd.diagonal(pos) / cd.diagonal(neg));
  const Vector<QN> u = cd.basis.col(pos).cast<QN>() + s * cd.basis.col(neg).cast<QN>();
  if (s.is_rational()) {
    return feasible(WitnessQ{cd.basis.col(pos) + s.rational_part() * cd.basis.col(neg), {}, {}},
                    "indefinite_form");
  }
  return feasible(WitnessQN{u, {}, {}}, "indefinite_form");
}

Verdict decide_quadratic_n2(const QuadraticInstance& q) {
  if (q.n() != 2) throw InvalidInput("decide_quadratic_n2: dimension must be 2");
  auto point = analyze_chart("u=(0,1)", quadratic_chart(q, false));
  if (point.root) {
    return feasible(WitnessQ{(VectorQ(2) << 0, 1).finished(), {}, {}}, "sturm_n2");
  }
  auto line = analyze_chart("u=(1,t)", quadratic_chart(q, true));
  if (line.root) {
    const Vector<QN> u = vec2(QN(1), *line.root);
    Certificate cert = WitnessQN{u, {}, {}};
    if (line.root->is_rational()) {
      cert = WitnessQ{(VectorQ(2) << 1, line.root->rational_part()).finished(), {}, {}};
    }
    return feasible(std::move(cert), "sturm_n2");
  }
  return {Outcome::infeasible_certified, SturmCertificate{{point.chart, line.chart}, -1}, "sturm_n2", {}};
}

Verdict decide_quadratic(const QuadraticInstance& q) {
  for (Index t = 0; t < q.m(); ++t) {
    const auto& form = q.forms()[static_cast<std::size_t>(t)];
    const auto kind = definiteness(form);
    if (kind != Definiteness::neither) {
      return {Outcome::infeasible_certified,
              DefinitenessCertificate{t, kind, congruence_diagonalize(form)}, "definite_form", {}};
    }
  }
  if (q.n() == 1) {
    // Every form is zero here, otherwise it would be definite.
    return feasible(WitnessQ{VectorQ::Ones(1), {}, {}}, "zero_forms");
  }
  if (q.m() == 1) return decide_quadratic_m1(q.forms().front());
  if (q.n() == 2) return decide_quadratic_n2(q);
  return {Outcome::unknown, std::monostate{}, "no_exact_oracle", {}};
}

Verdict decide_bilinear_n2(const BilinearInstance& b) {
  if (b.n() != 2) throw InvalidInput("decide_bilinear_n2: dimension must be 2");
  // With x fixed the stacked rows x^T M_l have rank <= 1, so any nonzero
  // row (a, c) is annihilated by y = (c, -a).
  auto witness = [](const std::vector<std::array<UniPoly, 2>>& rows, Vector<QN> x, const QN& t) {
    Vector<QN> y = vec2(QN(1), QN(0));
    for (const auto& row : rows) {
      const QN a = evaluate(row[0], t);
      const QN c = evaluate(row[1], t);
      if (!a.is_zero() || !c.is_zero()) {
        y = vec2(c, -a);
        break;
      }
    }
    WitnessQN w{std::move(x), std::move(y), {}};
    if (auto rational = as_rational(w)) return Certificate{*rational};
    return Certificate{std::move(w)};
  };
  const auto line_rows = bilinear_rows(b, true);
  auto line = analyze_chart("x=(1,t)", row_minors(line_rows));
  if (line.root) {
    return feasible(witness(line_rows, vec2(QN(1), *line.root), *line.root), "sturm_n2");
  }
  const auto point_rows = bilinear_rows(b, false);
  auto point = analyze_chart("x=(0,1)", row_minors(point_rows));
  if (point.root) {
    return feasible(witness(point_rows, vec2(QN(0), QN(1)), QN(0)), "sturm_n2");
  }
  return {Outcome::infeasible_certified, SturmCertificate{{point.chart, line.chart}, -1}, "sturm_n2", {}};
}

namespace {

// Determinant of the r x r submatrix of a + t b on (rows, cols), as a
// polynomial in t interpolated from the values at t = 0, ..., r.
UniPoly minor_poly(const MatrixQ& a, const MatrixQ& b, const std::vector<Index>& rows,
                   const std::vector<Index>& cols) {
  const Index r = static_cast<Index>(rows.size());
  UniPoly out;
  for (Index p = 0; p <= r; ++p) {
    MatrixQ m(r, r);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < r; ++j) {
        const auto ri = rows[static_cast<std::size_t>(i)];
        const auto cj = cols[static_cast<std::size_t>(j)];
        m(i, j) = a(ri, cj) + Rational(p) * b(ri, cj);
      }
    }
    const Rational v = det_exact(m);
    if (is_zero(v)) continue;
    UniPoly lagrange = UniPoly::constant(1);
    Rational denom = 1;
    for (Index q = 0; q <= r; ++q) {
      if (q == p) continue;
      lagrange = lagrange * UniPoly({Rational(-q), Rational(1)});
      denom *= Rational(p - q);
    }
    out = out + (v / denom) * lagrange;
  }
  return out;
}

std::vector<std::vector<Index>> subsets(Index n, Index r) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, Index start) -> void {
    if (static_cast<Index>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (Index i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

constexpr std::size_t max_minor_count = 4096;

// Moves `mode` last, keeping the other two in order.
ModePermutation mode_last(int mode) {
  ModePermutation perm{0, 0, mode};
  int slot = 0;
  for (int m = 0; m < 3; ++m) {
    if (m != mode) perm[static_cast<std::size_t>(slot++)] = m;
  }
  return perm;
}

template <typename Scalar>
WitnessTriple<Scalar> unpermute(const WitnessTriple<Scalar>& w, const ModePermutation& perm) {
  std::array<Vector<Scalar>, 3> modes;
  const std::array<const Vector<Scalar>*, 3> src{&w.x, &w.y, &w.z};
  for (std::size_t m = 0; m < 3; ++m) modes[static_cast<std::size_t>(perm[m])] = *src[m];
  return {modes[0], modes[1], modes[2]};
}

// Mode `mode` has size two; with the slices S_0, S_1 along it, a witness
// needs s with s_0 S_0 + s_1 S_1 singular on both sides, so every maximal
// minor of the pencil vanishes at s. Charts s = (0, 1) and s = (1, t).
std::optional<std::array<std::vector<UniPoly>, 2>> two_mode_charts(const TensorQ& t, int mode) {
  const TensorQ p = permute_modes(t, mode_last(mode));
  const MatrixQ& s0 = p.slice(0);
  const MatrixQ& s1 = p.slice(1);
  const Index r = std::min(s0.rows(), s0.cols());
  const auto rows = subsets(s0.rows(), r);
  const auto cols = subsets(s0.cols(), r);
  if (rows.size() * cols.size() > max_minor_count) return std::nullopt;
  const MatrixQ zero = MatrixQ::Zero(s0.rows(), s0.cols());
  std::array<std::vector<UniPoly>, 2> out;
  for (const auto& rs : rows) {
    for (const auto& cs : cols) {
      out[0].push_back(minor_poly(s1, zero, rs, cs));
      out[1].push_back(minor_poly(s0, s1, rs, cs));
    }
  }
  return out;
}

// u in the left and v in the right kernel with u^T b v = 0, if any.
std::optional<std::pair<Vector<QN>, Vector<QN>>> kernel_pair(const std::vector<Vector<QN>>& left,
                                                             const std::vector<Vector<QN>>& right,
                                                             const Matrix<QN>& b) {
  if (left.empty() || right.empty()) return std::nullopt;
  auto combine = [](const std::vector<Vector<QN>>& basis, const Vector<QN>& functional) {
    // A nonzero combination of >= 2 basis vectors annihilated by `functional`.
    Matrix<QN> row(1, static_cast<Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) row(0, static_cast<Index>(i)) = functional.dot(basis[i]);
    const auto c = kernel_basis(row).front();
    Vector<QN> out = Vector<QN>::Zero(basis.front().size());
    for (std::size_t i = 0; i < basis.size(); ++i) out += c(static_cast<Index>(i)) * basis[i];
    return out;
  };
  if (left.size() >= 2) {
    return std::make_pair(combine(left, Vector<QN>(b * right.front())), right.front());
  }
  if (right.size() >= 2) {
    return std::make_pair(left.front(), combine(right, Vector<QN>(b.transpose() * left.front())));
  }
  if (left.front().dot(b * right.front()).is_zero()) return std::make_pair(left.front(), right.front());
  return std::nullopt;
}

Matrix<QN> to_qn(const MatrixQ& m) { return m.cast<QN>(); }

Vector<QN> chart_point(bool point, const QN& t) { return point ? vec2(QN(0), QN(1)) : vec2(QN(1), t); }

struct Probe {
  std::optional<WitnessQN> witness;
  std::optional<ExcludedRoot> excluded;
};

// The pencil at s: a witness when the kernels admit a compatible pair, an
// exclusion when both kernels are lines pairing to a nonzero value.
Probe probe(const TensorQ& p, const Vector<QN>& s, const QN& parameter) {
  const Matrix<QN> s0 = to_qn(p.slice(0));
  const Matrix<QN> s1 = to_qn(p.slice(1));
  const Matrix<QN> n = s(0) * s0 + s(1) * s1;
  const Matrix<QN>& b = s(0).is_zero() ? s0 : s1;
  const auto left = kernel_basis(Matrix<QN>(n.transpose()));
  const auto right = kernel_basis(n);
  Probe out;
  if (const auto pair = kernel_pair(left, right, b)) {
    out.witness = WitnessQN{pair->first, pair->second, s};
  } else if (left.size() == 1 && right.size() == 1) {
    out.excluded = ExcludedRoot{parameter, left.front(), right.front(), left.front().dot(b * right.front())};
  }
  return out;
}

// Exact chart roots: rational or in a real quadratic field, without
// repetition. Empty when the squarefree part of the gcd has degree > 2.
std::vector<QN> chart_candidates(const SturmChart& c) {
  if (c.real_roots == -1) return {QN(0), QN(1), QN(-1), QN(2), QN(-2)};
  if (c.real_roots == 0) return {};
  const UniPoly g = squarefree_part(c.gcd).monic();
  if (g.degree() == 1) return {QN(-g.coeff(0))};
  if (g.degree() == 2) {
    const Rational p = g.coeff(1);
    const QN root = QN::sqrt_of(p * p - 4 * g.coeff(0));
    if (root.is_zero()) return {QN(-p) / QN(2)};
    return {(QN(-p) + root) / QN(2), (QN(-p) - root) / QN(2)};
  }
  return {};
}

// The chart of a square pencil holds its determinant alone.
bool squarefree_determinant(const SturmChart& c) {
  if (c.polynomials.size() != 1 || c.gcd.degree() < 1) return false;
  return gcd_poly(c.gcd, c.gcd.derivative()).degree() == 0;
}

struct TwoModeResult {
  std::optional<WitnessQN> witness;
  std::optional<SturmCertificate> certificate;
};

TwoModeResult two_mode(const TensorQ& t) {
  TwoModeResult out;
  for (int mode = 0; mode < 3; ++mode) {
    if (t.dims()[static_cast<std::size_t>(mode)] != 2) continue;
    const auto charts = two_mode_charts(t, mode);
    if (!charts) continue;
    const auto perm = mode_last(mode);
    const TensorQ p = permute_modes(t, perm);
    auto point = analyze_chart("s=(0,1)", (*charts)[0]);
    auto line = analyze_chart("s=(1,t)", (*charts)[1]);
    // The point chart has the single point s = (0, 1), a root when its
    // constant minors all vanish.
    bool certifiable = line.chart.real_roots != -1;
    std::vector<std::pair<SturmChart*, std::vector<QN>>> roots{
        {&point.chart, point.chart.real_roots == -1 ? std::vector<QN>{QN(0)} : std::vector<QN>{}},
        {&line.chart, chart_candidates(line.chart)}};
    if (line.chart.real_roots > 0 && static_cast<Index>(roots[1].second.size()) != line.chart.real_roots) {
      line.chart.simple_roots = squarefree_determinant(line.chart);
      certifiable = line.chart.simple_roots;
      roots[1].second.clear();
    }
    for (auto& [chart, candidates] : roots) {
      const bool is_point = chart == &point.chart;
      for (const auto& root : candidates) {
        auto pr = probe(p, chart_point(is_point, root), root);
        if (pr.witness) {
          out.witness = unpermute(*pr.witness, perm);
          return out;
        }
        if (pr.excluded) {
          chart->excluded.push_back(std::move(*pr.excluded));
        } else {
          certifiable = false;
        }
      }
    }
    if (!out.certificate && certifiable) out.certificate = SturmCertificate{{point.chart, line.chart}, mode};
  }
  return out;
}

Certificate exact_witness(WitnessQN w) {
  if (auto rational = as_rational(w)) return Certificate{*rational};
  return Certificate{std::move(w)};
}

}  // namespace

Verdict decide_two_mode(const TensorQ& t) {
  const auto r = two_mode(t);
  if (r.witness) return feasible(exact_witness(*r.witness), "pencil_minors");
  if (r.certificate) return {Outcome::infeasible_certified, *r.certificate, "pencil_minors", {}};
  return {Outcome::unknown, std::monostate{}, "pencil_minors", {}};
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Linear systems whose kernels are the admissible x, y or z with the other
// two vectors fixed. Shared by the floating-point descent and the exact
// repair step.
template <typename Scalar>
Matrix<Scalar> x_system(const std::vector<Matrix<Scalar>>& s, const Vector<Scalar>& y,
                        const Vector<Scalar>& z) {
  const Index n1 = s.front().rows(), n2 = s.front().cols(), n3 = static_cast<Index>(s.size());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n3 + n2, n1);
  Matrix<Scalar> mz = Matrix<Scalar>::Zero(n1, n2);
  for (Index k = 0; k < n3; ++k) {
    out.row(k) = (s[static_cast<std::size_t>(k)] * y).transpose();
    mz += z(k) * s[static_cast<std::size_t>(k)];
  }
  out.bottomRows(n2) = mz.transpose();
  return out;
}

template <typename Scalar>
Matrix<Scalar> y_system(const std::vector<Matrix<Scalar>>& s, const Vector<Scalar>& x,
                        const Vector<Scalar>& z) {
  const Index n1 = s.front().rows(), n2 = s.front().cols(), n3 = static_cast<Index>(s.size());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n3 + n1, n2);
  Matrix<Scalar> mz = Matrix<Scalar>::Zero(n1, n2);
  for (Index k = 0; k < n3; ++k) {
    out.row(k) = (s[static_cast<std::size_t>(k)].transpose() * x).transpose();
    mz += z(k) * s[static_cast<std::size_t>(k)];
  }
  out.bottomRows(n1) = mz;
  return out;
}

template <typename Scalar>
Matrix<Scalar> z_system(const std::vector<Matrix<Scalar>>& s, const Vector<Scalar>& x,
                        const Vector<Scalar>& y) {
  const Index n1 = s.front().rows(), n2 = s.front().cols(), n3 = static_cast<Index>(s.size());
  Matrix<Scalar> out(n2 + n1, n3);
  for (Index k = 0; k < n3; ++k) {
    out.col(k).head(n2) = s[static_cast<std::size_t>(k)].transpose() * x;
    out.col(k).tail(n1) = s[static_cast<std::size_t>(k)] * y;
  }
  return out;
}

double residual(const std::vector<MatrixXd>& s, const VectorXd& x, const VectorXd& y,
                const VectorXd& z) {
  // ||T(x,y,.)||^2 + ||T(x,.,z)||^2 + ||T(.,y,z)||^2 = ||X x||^2 + ||T(.,y,z)||^2
  const MatrixXd sx = x_system(s, y, z);
  VectorXd yz = VectorXd::Zero(s.front().rows());
  for (std::size_t k = 0; k < s.size(); ++k) yz += z(static_cast<Index>(k)) * (s[k] * y);
  return (sx * x).squaredNorm() + yz.squaredNorm();
}

VectorXd smallest_direction(const MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a.transpose() * a);
  return es.eigenvectors().col(0);
}

VectorXd random_unit(Index n, Rng& rng) {
  VectorXd v(n);
  do {
    for (Index i = 0; i < n; ++i) v(i) = rng.symmetric_unit();
  } while (v.norm() < 1e-3);
  return v.normalized();
}

VectorQ round_projective(const VectorXd& v, std::int64_t bound) {
  Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  const VectorXd scaled = v / v(big);
  VectorQ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = best_rational_approximation(scaled(i), bound);
  return out;
}

// Exact kernel vector of `system` closest to the float direction `guess`:
// RREF basis vectors are indexed by free columns, so the guess's rounded
// free coordinates pick the combination.
std::optional<VectorQ> kernel_pick(const MatrixQ& system, const VectorXd& guess, std::int64_t bound) {
  const auto basis = kernel_basis(system);
  if (basis.empty()) return std::nullopt;
  Index big = 0;
  guess.cwiseAbs().maxCoeff(&big);
  const VectorXd g = guess / guess(big);
  VectorQ v = VectorQ::Zero(system.cols());
  for (const auto& b : basis) {
    Index free = 0;
    while (!(b(free) == 1)) ++free;  // leading 1 of the basis vector in its free column
    bool pivot_free = true;
    for (const auto& other : basis) {
      if (&other != &b && !is_zero(other(free))) pivot_free = false;
    }
    if (!pivot_free) continue;
    v += best_rational_approximation(g(free), bound) * b;
  }
  if (is_zero_vector(v)) v = basis.front();
  return v;
}

std::optional<WitnessQ> round_and_repair(const TensorQ& t, const VectorXd& x, const VectorXd& y,
                                         const VectorXd& z, std::int64_t bound) {
  WitnessQ w{round_projective(x, bound), round_projective(y, bound), round_projective(z, bound)};
  if (verify_tensor_witness(t, w)) return w;
  const auto& s = t.slices();
  for (int sweep = 0; sweep < 2; ++sweep) {
    if (auto nx = kernel_pick(x_system(s, w.y, w.z), x, bound)) w.x = *nx;
    if (verify_tensor_witness(t, w)) return w;
    if (auto ny = kernel_pick(y_system(s, w.x, w.z), y, bound)) w.y = *ny;
    if (verify_tensor_witness(t, w)) return w;
    if (auto nz = kernel_pick(z_system(s, w.x, w.y), z, bound)) w.z = *nz;
    if (verify_tensor_witness(t, w)) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessQN> numerical_search(const TensorQ& t, const SearchConfig& cfg,
                                          SearchStats* stats) {
  cfg.validate();
  SearchStats local;
  std::vector<MatrixXd> s;
  for (const auto& slice : t.slices()) {
    MatrixXd d(slice.rows(), slice.cols());
    for (Index i = 0; i < slice.rows(); ++i) {
      for (Index j = 0; j < slice.cols(); ++j) d(i, j) = tensordeg::to_double(slice(i, j));
    }
    s.push_back(std::move(d));
  }
  // Scale-free stopping rule.
  double scale = 0.0;
  for (const auto& d : s) scale = std::max(scale, d.cwiseAbs().maxCoeff());
  if (scale == 0.0) scale = 1.0;
  for (auto& d : s) d /= scale;

  std::optional<WitnessQN> found;
  bool algebraic_tried = false;
  for (Index restart = 0; restart < cfg.restarts && !found; ++restart) {
    ++local.restarts;
    Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(restart)));
    VectorXd x = random_unit(t.n1(), rng);
    VectorXd y = random_unit(t.n2(), rng);
    VectorXd z = random_unit(t.n3(), rng);
    double f = residual(s, x, y, z);
    for (Index it = 0; it < cfg.max_iterations && f >= cfg.tolerance; ++it) {
      ++local.iterations;
      x = smallest_direction(x_system(s, y, z));
      y = smallest_direction(y_system(s, x, z));
      z = smallest_direction(z_system(s, x, y));
      const double next = residual(s, x, y, z);
      const bool stalled = f - next < 1e-12 * f;
      f = next;
      if (stalled) break;
    }
    if (local.best_residual < 0 || f < local.best_residual) local.best_residual = f;
    if (f < cfg.tolerance) ++local.converged;
    // Descent near a singular point is slow; exact verification makes it
    // safe to also round points that are close but not yet converged.
    if (f >= std::sqrt(cfg.tolerance)) continue;
    ++local.rounding_attempts;
    if (auto w = round_and_repair(t, x, y, z, cfg.denominator_bound)) {
      found = w->cast<QN>();
    } else if (!algebraic_tried) {
      // A converged point that does not round is typically irrational; with
      // a mode of size two its coordinates are reachable exactly.
      algebraic_tried = true;
      found = two_mode(t).witness;
    }
  }
  if (stats) *stats = local;
  return found;
}

namespace {

std::optional<WitnessQ> basis_witness(const TensorQ& t) {
  for (Index i = 0; i < t.n1(); ++i) {
    for (Index j = 0; j < t.n2(); ++j) {
      for (Index k = 0; k < t.n3(); ++k) {
        WitnessQ w{VectorQ::Unit(t.n1(), i), VectorQ::Unit(t.n2(), j), VectorQ::Unit(t.n3(), k)};
        if (verify_tensor_witness(t, w)) return w;
      }
    }
  }
  return std::nullopt;
}

int unit_mode(const TensorQ& t) {
  for (int m = 0; m < 3; ++m) {
    if (t.dims()[static_cast<std::size_t>(m)] == 1) return m;
  }
  return -1;
}

// Exact decision for tensors with a mode of size one: T is a matrix S and is
// degenerate iff S has both a nontrivial left and right kernel.
std::optional<Verdict> decide_matrix_format(const TensorQ& t) {
  const int unit = unit_mode(t);
  if (unit < 0) return std::nullopt;
  const auto perm = mode_last(unit);
  const TensorQ p = permute_modes(t, perm);
  const MatrixQ& s = p.slice(0);
  const auto right = kernel_basis(s);
  const auto left = kernel_basis(MatrixQ(s.transpose()));
  if (!right.empty() && !left.empty()) {
    return feasible(unpermute(WitnessQ{left.front(), right.front(), VectorQ::Ones(1)}, perm),
                    "matrix_kernel");
  }
  if (hyperdet_supported(Format::of(t))) {
    return Verdict{Outcome::infeasible_certified, HyperdetCertificate{hyperdet(t)}, "hyperdeterminant", {}};
  }
  const bool right_trivial = right.empty();
  return Verdict{Outcome::infeasible_certified,
                 RankCertificate{right_trivial ? "right" : "left", rank_exact(s),
                                 right_trivial ? s.cols() : s.rows()},
                 "matrix_rank", {}};
}

}  // namespace

Verdict decide(const TensorQ& t, const SearchConfig& cfg) {
  cfg.validate();
  if (auto w = basis_witness(t)) return feasible(*w, "basis_vectors");
  if (auto v = decide_matrix_format(t)) return *v;
  if (hyperdet_supported(Format::of(t))) {
    // Any witness forces the value to vanish, so a nonzero value settles the
    // question before any search.
    const auto hd = hyperdet(t);
    if (!is_zero(hd.value)) {
      return {Outcome::infeasible_certified, HyperdetCertificate{hd}, "hyperdeterminant", {}};
    }
  }
  if (auto v = decide_two_mode(t); v.outcome != Outcome::unknown) return v;
  SearchStats stats;
  if (auto w = numerical_search(t, cfg, &stats)) {
    Verdict v = feasible(exact_witness(*w), "numerical_search");
    v.stats = stats;
    return v;
  }
  return {Outcome::unknown, std::monostate{}, "search_exhausted", stats};
}

namespace {

bool recheck_definiteness(const MatrixQ& q, const DefinitenessCertificate& c) {
  const auto& cd = c.diagonalization;
  if (cd.basis.rows() != q.rows() || cd.basis.cols() != q.rows()) return false;
  if (is_zero(det_exact(cd.basis))) return false;
  const MatrixQ d = cd.basis.transpose() * q * cd.basis;
  if (d != MatrixQ(cd.diagonal.asDiagonal())) return false;
  if (c.kind == Definiteness::neither) return false;
  const int want = c.kind == Definiteness::positive_definite ? 1 : -1;
  for (Index i = 0; i < cd.diagonal.size(); ++i) {
    if (sign(cd.diagonal(i)) != want) return false;
  }
  return true;
}

// The stored polynomials, gcd and root count match a recomputation.
bool recheck_chart_data(const SturmChart& c, const std::vector<UniPoly>& expected) {
  if (c.polynomials != expected) return false;
  UniPoly g;
  for (const auto& p : expected) {
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : gcd_poly(g, p);
  }
  if (g.is_zero()) return c.real_roots == -1 && c.gcd.is_zero();
  if (!(g == c.gcd)) return false;
  const Index roots =
      g.degree() == 0 ? 0 : sturm_root_count(g, Endpoint::neg_infinity(), Endpoint::pos_infinity());
  return roots == c.real_roots;
}

bool recheck_chart(const SturmChart& c, const std::vector<UniPoly>& expected) {
  return recheck_chart_data(c, expected) && c.real_roots == 0 && c.excluded.empty() && !c.simple_roots;
}

bool recheck_exclusion(const TensorQ& p, const Vector<QN>& s, const ExcludedRoot& e) {
  const Matrix<QN> n = s(0) * to_qn(p.slice(0)) + s(1) * to_qn(p.slice(1));
  const Matrix<QN> b = to_qn(s(0).is_zero() ? p.slice(0) : p.slice(1));
  if (e.left.size() != n.rows() || e.right.size() != n.cols()) return false;
  if (is_zero_vector(e.left) || is_zero_vector(e.right)) return false;
  if (!is_zero_vector(Vector<QN>(n.transpose() * e.left)) || !is_zero_vector(Vector<QN>(n * e.right))) return false;
  if (kernel_basis(Matrix<QN>(n.transpose())).size() != 1 || kernel_basis(n).size() != 1) return false;
  return !e.pairing.is_zero() && e.pairing == e.left.dot(b * e.right);
}

// Every real root of the two charts of `mode` is listed and excluded.
bool recheck_two_mode(const TensorQ& t, const SturmCertificate& c) {
  if (c.mode < 0 || c.mode > 2 || t.dims()[static_cast<std::size_t>(c.mode)] != 2) return false;
  const auto charts = two_mode_charts(t, c.mode);
  if (!charts || c.charts.size() != 2) return false;
  const SturmChart& point = c.charts[0];
  const SturmChart& line = c.charts[1];
  if (!recheck_chart_data(point, (*charts)[0]) || !recheck_chart_data(line, (*charts)[1])) return false;
  const TensorQ p = permute_modes(t, mode_last(c.mode));
  if (point.excluded.size() != (point.real_roots == -1 ? 1u : 0u)) return false;
  for (const auto& e : point.excluded) {
    if (!recheck_exclusion(p, vec2(QN(0), QN(1)), e)) return false;
  }
  if (point.simple_roots || line.real_roots < 0) return false;
  if (line.simple_roots) return line.excluded.empty() && squarefree_determinant(line);
  if (static_cast<Index>(line.excluded.size()) != line.real_roots) return false;
  for (std::size_t i = 0; i < line.excluded.size(); ++i) {
    const auto& e = line.excluded[i];
    if (!evaluate(line.gcd, e.parameter).is_zero()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (line.excluded[j].parameter == e.parameter) return false;
    }
    if (!recheck_exclusion(p, vec2(QN(1), e.parameter), e)) return false;
  }
  return true;
}

}  // namespace

bool recheck(const TensorQ& t, const Verdict& v) {
  switch (v.outcome) {
    case Outcome::unknown: return std::holds_alternative<std::monostate>(v.certificate);
    case Outcome::feasible_certified:
      if (const auto* w = std::get_if<WitnessQ>(&v.certificate)) return verify_tensor_witness(t, *w);
      if (const auto* w = std::get_if<WitnessQN>(&v.certificate)) return verify_tensor_witness(t, *w);
      return false;
    case Outcome::infeasible_certified:
      if (const auto* h = std::get_if<HyperdetCertificate>(&v.certificate)) {
        if (!hyperdet_supported(Format::of(t))) return false;
        const auto again = hyperdet(t);
        return !is_zero(again.value) && again.value == h->result.value;
      }
      if (const auto* r = std::get_if<RankCertificate>(&v.certificate)) {
        const int unit = unit_mode(t);
        if (unit < 0) return false;
        const MatrixQ s = permute_modes(t, mode_last(unit)).slice(0);
        const Index dim = r->side == "right" ? s.cols() : s.rows();
        return rank_exact(s) == r->rank && r->rank == dim && r->dimension == dim;
      }
      if (const auto* c = std::get_if<SturmCertificate>(&v.certificate)) return recheck_two_mode(t, *c);
      return false;
  }
  return false;
}

bool recheck(const QuadraticInstance& q, const Verdict& v) {
  switch (v.outcome) {
    case Outcome::unknown: return true;
    case Outcome::feasible_certified:
      if (const auto* w = std::get_if<WitnessQ>(&v.certificate)) return verify_quadratic_witness(q, w->x);
      if (const auto* w = std::get_if<WitnessQN>(&v.certificate)) {
        return verify_quadratic_witness(q, w->x);
      }
      return false;
    case Outcome::infeasible_certified:
      if (const auto* c = std::get_if<DefinitenessCertificate>(&v.certificate)) {
        if (c->form_index < 0 || c->form_index >= q.m()) return false;
        return recheck_definiteness(q.forms()[static_cast<std::size_t>(c->form_index)], *c);
      }
      if (const auto* c = std::get_if<SturmCertificate>(&v.certificate)) {
        if (q.n() != 2 || c->charts.size() != 2) return false;
        return recheck_chart(c->charts[0], quadratic_chart(q, false)) &&
               recheck_chart(c->charts[1], quadratic_chart(q, true));
      }
      return false;
  }
  return false;
}

}  // namespace tensordeg
