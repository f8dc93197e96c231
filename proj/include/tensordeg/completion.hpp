#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensordeg/hyperdet.hpp"

namespace tensordeg {

using Cell = std::array<Index, 3>;

/// Embedding of an input format into a supported boundary target format.
/// The completion T^(U) holds the input on the placed cells, the point U on
/// the free cells (in order) and constants on the fixed cells.
struct CompletionTemplate {
  Format input;
  Format target;
  std::vector<std::pair<Cell, Cell>> placement;
  std::vector<Cell> free_cells;
  std::vector<std::pair<Cell, Rational>> fixed_cells;

  Index free_count() const { return static_cast<Index>(free_cells.size()); }
  /// Identifier of the polynomial family the template induces.
  std::string family() const;
};

/// Throws InvalidInput when placement is not injective, a cell lies outside
/// its format, the cells do not partition the target, or the target is not a
/// supported boundary format.
void validate(const CompletionTemplate& tpl);

/// Corner placement into the smallest supported target format containing
/// the input modewise (ties go to the target with larger leading modes).
/// Supported boundary inputs get the identity template. Throws
/// UnsupportedFormat when no supported target is large enough.
CompletionTemplate build_template(const Format& input);

/// T^(point). Throws DimensionError on a format or point size mismatch.
TensorQ assemble(const TensorQ& t, const CompletionTemplate& tpl, const VectorQ& point);

/// P_T(point) = Det(T^(point)), exactly.
Rational eval_completion(const TensorQ& t, const CompletionTemplate& tpl, const VectorQ& point);

/// Upper bound on the total degree of P_T in U: the homogeneity degree of
/// the target's hyperdeterminant.
int completion_degree_bound(const CompletionTemplate& tpl);

/// FNV-1a digest of the decimal coordinates, as 16 hex digits.
std::string point_digest(const VectorQ& point);

enum class SZVerdict { all_zero, hitting_point_found };

const char* to_string(SZVerdict v);

struct SZEvaluation {
  std::string digest;
  bool zero = true;
};

struct SZReport {
  Index trials = 0;
  std::int64_t sample_bound = 0;
  std::uint64_t seed = 0;
  std::vector<SZEvaluation> evaluations;
  SZVerdict verdict = SZVerdict::all_zero;
  std::optional<VectorQ> hitting_point;
};

/// Evaluates P_T at up to `trials` points with coordinates uniform in
/// [0, sample_bound); trial i draws from Rng(derive(seed, i)). Stops at the
/// first nonzero value. Throws InvalidInput when trials < 1 or
/// sample_bound < 2 * completion_degree_bound(tpl).
SZReport sz_test(const TensorQ& t, const CompletionTemplate& tpl, Index trials,
                 std::int64_t sample_bound, std::uint64_t seed);

enum class HittingStrategy { zeros, unit_points, coordinate_ramp };

const char* to_string(HittingStrategy s);
HittingStrategy parse_hitting_strategy(const std::string& name);

/// First point of the strategy's sequence with P_T != 0: the zero point;
/// the standard basis assignments e_1, ..., e_f; the ramp (1, 2, ..., f).
/// With no free cells every strategy probes only the empty point.
std::optional<VectorQ> hitting_attempt(const TensorQ& t, const CompletionTemplate& tpl,
                                       HittingStrategy strategy);

enum class PitOutcome { identically_zero_up_to_budget, nonzero_with_point };

const char* to_string(PitOutcome o);

struct PitBudget {
  Index trials = 20;
  std::int64_t sample_bound = std::int64_t{1} << 20;
  std::uint64_t seed = 0;
};

struct PitResult {
  PitOutcome outcome = PitOutcome::identically_zero_up_to_budget;
  std::optional<VectorQ> point;
  /// Strategy name or "sz_test" for the point's origin.
  std::string found_by;
  std::optional<SZReport> sz;
};

/// The three deterministic strategies, then sz_test. A returned point
/// re-evaluates nonzero; identically_zero_up_to_budget proves nothing.
PitResult completion_pit(const TensorQ& t, const CompletionTemplate& tpl, const PitBudget& budget);

}  // namespace tensordeg
