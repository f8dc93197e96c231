#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tensordeg/hyperdet.hpp"
#include "tensordeg/instances.hpp"
#include "tensordeg/poly.hpp"

namespace tensordeg {

enum class Outcome { feasible_certified, infeasible_certified, unknown };

const char* to_string(Outcome o);

/// basis^T q basis = diag(d) with all d of one strict sign.
struct DefinitenessCertificate {
  Index form_index = 0;
  Definiteness kind = Definiteness::neither;
  CongruenceDiagonalization diagonalization;
};

/// A real root of a tensor chart at which the pencil has one-dimensional
/// left and right kernels, spanned by `left` and `right`, whose pairing
/// under the other slice is nonzero. No witness sits at such a point.
struct ExcludedRoot {
  QuadraticNumber parameter;
  Vector<QuadraticNumber> left;
  Vector<QuadraticNumber> right;
  QuadraticNumber pairing;
};

/// One affine chart of the projective line: the polynomials that must vanish
/// simultaneously, their monic gcd and its number of distinct real roots.
struct SturmChart {
  std::string chart;
  std::vector<UniPoly> polynomials;
  UniPoly gcd;
  /// -1 when every polynomial vanishes identically.
  Index real_roots = 0;
  /// Tensor charts only: every real root of the chart, each excluded.
  std::vector<ExcludedRoot> excluded;
  /// Tensor charts of square pencils only: the determinant is squarefree,
  /// which excludes every root without listing it. At a simple root the
  /// kernels are lines and, by Jacobi's formula, their pairing under the
  /// other slice is a nonzero multiple of the derivative.
  bool simple_roots = false;
};

/// Infeasibility on P^1: every chart's common real roots are excluded (for
/// quadratic systems there are none). For tensors the parameter is a point
/// of the size-two `mode`; -1 for quadratic systems.
struct SturmCertificate {
  std::vector<SturmChart> charts;
  int mode = -1;
};

struct HyperdetCertificate {
  HyperdetResult result;
};

/// Matrix-format tensor whose slice has a trivial left or right kernel.
struct RankCertificate {
  std::string side;
  Index rank = 0;
  Index dimension = 0;
};

using WitnessQN = WitnessTriple<QuadraticNumber>;

using Certificate = std::variant<std::monostate, WitnessQ, WitnessQN,
                                 DefinitenessCertificate, SturmCertificate, HyperdetCertificate,
                                 RankCertificate>;

struct SearchStats {
  Index restarts = 0;
  Index iterations = 0;
  Index converged = 0;
  Index rounding_attempts = 0;
  double best_residual = -1.0;
};

/// Feasible verdicts carry a witness (rational or over a real quadratic
/// field); infeasible verdicts carry an exact algebraic certificate.
struct Verdict {
  Outcome outcome = Outcome::unknown;
  Certificate certificate;
  std::string method;
  SearchStats stats;
};

struct SearchConfig {
  Index restarts = 200;
  Index max_iterations = 500;
  double tolerance = 1e-10;
  std::int64_t denominator_bound = 64;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Single form: feasible iff the form is not definite. Indefinite forms get
/// the witness a + sqrt(-d_a / d_b) b from a congruence diagonalization.
/// Throws InvalidInput for a non-symmetric matrix.
Verdict decide_quadratic_m1(const MatrixQ& q);

/// n = 2, any m: sweep u = (0, 1) and u = (1, t); the forms restricted to
/// the second chart are quadratics in t whose gcd carries any common root.
Verdict decide_quadratic_n2(const QuadraticInstance& q);

/// Exact decision where available (a definite form, n = 1, m = 1, n = 2);
/// otherwise unknown.
Verdict decide_quadratic(const QuadraticInstance& q);

/// n = 2: x = (1, t) or x = (0, 1); a nonzero y exists iff the stacked rows
/// x^T M_l have rank < 2, i.e. all their 2 x 2 minors vanish. Throws
/// InvalidInput when n != 2.
Verdict decide_bilinear_n2(const BilinearInstance& b);

/// Tensors with a mode of size two. The slices S_0, S_1 along that mode
/// form a pencil; a witness needs a point s where s_0 S_0 + s_1 S_1 drops
/// rank on both sides, i.e. a common real root of all maximal minors.
/// Feasible when such a root is rational or quadratic and the kernels admit
/// a compatible pair. Infeasible with a Sturm certificate when every common
/// real root is known exactly and excluded by incompatible one-dimensional
/// kernels (in particular when there is none). Unknown otherwise, including
/// formats without a mode of size two.
Verdict decide_two_mode(const TensorQ& t);

/// Alternating exact block minimization of the contraction residual over
/// the unit spheres with seeded restarts. Converged points are rounded to
/// small-denominator rationals and repaired through exact kernels; a point
/// that does not round is lifted exactly through decide_two_mode when the
/// format allows. Returns only exactly verified witnesses.
std::optional<WitnessQN> numerical_search(const TensorQ& t, const SearchConfig& cfg,
                                          SearchStats* stats = nullptr);

/// Basis-vector witnesses, exact matrix-format decision, nonzero
/// hyperdeterminant, decide_two_mode, then numerical search; unknown
/// otherwise.
Verdict decide(const TensorQ& t, const SearchConfig& cfg);

/// Re-checks the certificate of a tensor verdict in exact arithmetic.
bool recheck(const TensorQ& t, const Verdict& v);

/// Re-checks the certificate of a quadratic verdict in exact arithmetic.
bool recheck(const QuadraticInstance& q, const Verdict& v);

}  // namespace tensordeg
