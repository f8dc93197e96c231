#include "tensordeg/completion.hpp"

#include <algorithm>
#include <set>

#include "tensordeg/io.hpp"

namespace tensordeg {

namespace {

std::vector<Format> supported_targets() {
  std::vector<Format> out{Format(3, 2, 2), Format(2, 3, 2), Format(2, 2, 3)};
  for (Index n = 1; n <= 8; ++n) {
    out.emplace_back(n, n, 1);
    out.emplace_back(n, 1, n);
    out.emplace_back(1, n, n);
  }
  return out;
}

bool inside(const Cell& c, const Format& f) {
  for (std::size_t m = 0; m < 3; ++m) {
    if (c[m] < 0 || c[m] >= f[m]) return false;
  }
  return true;
}

Cell cell_of(Index l, const Format& f) { return {l % f[0], (l / f[0]) % f[1], l / (f[0] * f[1])}; }

}  // namespace

std::string CompletionTemplate::family() const {
  return "corner:" + input.str() + "->" + target.str();
}

void validate(const CompletionTemplate& tpl) {
  if (!hyperdet_supported(tpl.target)) {
    throw InvalidInput("template target " + tpl.target.str() + " is not a supported boundary format");
  }
  std::set<Cell> sources;
  std::set<Cell> used;
  auto claim = [&](const Cell& c) {
    if (!inside(c, tpl.target)) throw InvalidInput("template cell outside the target format");
    if (!used.insert(c).second) throw InvalidInput("template cells overlap");
  };
  for (const auto& [from, to] : tpl.placement) {
    if (!inside(from, tpl.input)) throw InvalidInput("placed cell outside the input format");
    if (!sources.insert(from).second) throw InvalidInput("input cell placed twice");
    claim(to);
  }
  if (static_cast<Index>(sources.size()) != tpl.input.cells()) {
    throw InvalidInput("template does not place every input cell");
  }
  for (const auto& c : tpl.free_cells) claim(c);
  for (const auto& [c, value] : tpl.fixed_cells) claim(c);
  if (static_cast<Index>(used.size()) != tpl.target.cells()) {
    throw InvalidInput("template cells do not cover the target format");
  }
}

CompletionTemplate build_template(const Format& input) {
  std::optional<Format> best;
  if (hyperdet_supported(input)) {
    best = input;
  } else {
    for (const auto& f : supported_targets()) {
      if (f[0] < input[0] || f[1] < input[1] || f[2] < input[2]) continue;
      if (!best || f.cells() < best->cells() ||
          (f.cells() == best->cells() && f.dims() > best->dims())) {
        best = f;
      }
    }
  }
  if (!best) throw UnsupportedFormat("no supported boundary format contains " + input.str());
  CompletionTemplate tpl{input, *best, {}, {}, {}};
  for (Index l = 0; l < best->cells(); ++l) {
    const Cell c = cell_of(l, *best);
    if (inside(c, input)) {
      tpl.placement.emplace_back(c, c);
    } else {
      tpl.free_cells.push_back(c);
    }
  }
  return tpl;
}

TensorQ assemble(const TensorQ& t, const CompletionTemplate& tpl, const VectorQ& point) {
  if (Format::of(t) != tpl.input) {
    throw DimensionError("tensor format " + Format::of(t).str() + " does not match template input " +
                         tpl.input.str());
  }
  detail::require_length(point.size(), tpl.free_count(), "completion point");
  TensorQ out = TensorQ::zero(tpl.target.dims());
  for (const auto& [from, to] : tpl.placement) out(to[0], to[1], to[2]) = t(from[0], from[1], from[2]);
  for (Index u = 0; u < tpl.free_count(); ++u) {
    const Cell& c = tpl.free_cells[static_cast<std::size_t>(u)];
    out(c[0], c[1], c[2]) = point(u);
  }
  for (const auto& [c, value] : tpl.fixed_cells) out(c[0], c[1], c[2]) = value;
  return out;
}

Rational eval_completion(const TensorQ& t, const CompletionTemplate& tpl, const VectorQ& point) {
  return hyperdet(assemble(t, tpl, point)).value;
}

int completion_degree_bound(const CompletionTemplate& tpl) { return hyperdet_degree(tpl.target); }

std::string point_digest(const VectorQ& point) {
  std::string text;
  for (Index i = 0; i < point.size(); ++i) text += to_string(point(i)) + ";";
  return fnv1a_hex(text);
}

const char* to_string(SZVerdict v) {
  return v == SZVerdict::all_zero ? "all_zero" : "hitting_point_found";
}

SZReport sz_test(const TensorQ& t, const CompletionTemplate& tpl, Index trials,
                 std::int64_t sample_bound, std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("sz_test: trials must be at least 1");
  const int degree = completion_degree_bound(tpl);
  if (sample_bound < 2 * static_cast<std::int64_t>(degree)) {
    throw InvalidInput("sz_test: sample bound " + std::to_string(sample_bound) +
                       " is below twice the degree bound " + std::to_string(degree));
  }
  SZReport report{trials, sample_bound, seed, {}, SZVerdict::all_zero, std::nullopt};
  for (Index i = 0; i < trials; ++i) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
    VectorQ point(tpl.free_count());
    for (Index u = 0; u < point.size(); ++u) point(u) = rng.uniform_int(0, sample_bound - 1);
    const bool zero = is_zero(eval_completion(t, tpl, point));
    report.evaluations.push_back({point_digest(point), zero});
    if (!zero) {
      report.verdict = SZVerdict::hitting_point_found;
      report.hitting_point = point;
      break;
    }
  }
  return report;
}

const char* to_string(HittingStrategy s) {
  switch (s) {
    case HittingStrategy::zeros: return "zeros";
    case HittingStrategy::unit_points: return "unit_points";
    case HittingStrategy::coordinate_ramp: return "coordinate_ramp";
  }
  return "";
}

HittingStrategy parse_hitting_strategy(const std::string& name) {
  for (auto s : {HittingStrategy::zeros, HittingStrategy::unit_points, HittingStrategy::coordinate_ramp}) {
    if (name == to_string(s)) return s;
  }
  throw InvalidInput("unknown hitting strategy '" + name + "'");
}

std::optional<VectorQ> hitting_attempt(const TensorQ& t, const CompletionTemplate& tpl,
                                       HittingStrategy strategy) {
  const Index f = tpl.free_count();
  std::vector<VectorQ> points;
  if (f == 0) {
    points.emplace_back(0);
  } else {
    switch (strategy) {
      case HittingStrategy::zeros: points.push_back(VectorQ::Zero(f)); break;
      case HittingStrategy::unit_points:
        for (Index u = 0; u < f; ++u) points.push_back(VectorQ::Unit(f, u));
        break;
      case HittingStrategy::coordinate_ramp: {
        VectorQ ramp(f);
        for (Index u = 0; u < f; ++u) ramp(u) = u + 1;
        points.push_back(std::move(ramp));
        break;
      }
    }
  }
  for (const auto& p : points) {
    if (!is_zero(eval_completion(t, tpl, p))) return p;
  }
  return std::nullopt;
}

const char* to_string(PitOutcome o) {
  return o == PitOutcome::nonzero_with_point ? "nonzero_with_point" : "identically_zero_up_to_budget";
}

PitResult completion_pit(const TensorQ& t, const CompletionTemplate& tpl, const PitBudget& budget) {
  PitResult result;
  for (auto s : {HittingStrategy::zeros, HittingStrategy::unit_points, HittingStrategy::coordinate_ramp}) {
    if (auto p = hitting_attempt(t, tpl, s)) {
      result.outcome = PitOutcome::nonzero_with_point;
      result.point = std::move(p);
      result.found_by = to_string(s);
      return result;
    }
  }
  result.sz = sz_test(t, tpl, budget.trials, budget.sample_bound, budget.seed);
  if (result.sz->hitting_point) {
    result.outcome = PitOutcome::nonzero_with_point;
    result.point = result.sz->hitting_point;
    result.found_by = "sz_test";
  }
  return result;
}

}  // namespace tensordeg
