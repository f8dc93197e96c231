// tensordeg: command-line front end. Reports go to stdout as one JSON
// document, diagnostics and timing to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tensordeg/completion.hpp"
#include "tensordeg/degeneracy.hpp"
#include "tensordeg/failures.hpp"
#include "tensordeg/hyperdet.hpp"
#include "tensordeg/io.hpp"
#include "tensordeg/reductions.hpp"
#include "tensordeg/report.hpp"

using nlohmann::json;
using namespace tensordeg;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { ok = 0, negative = 1, malformed = 2, unknown = 3 };

struct UsageError : InvalidInput {
  using InvalidInput::InvalidInput;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string digest(const json& j) { return fnv1a_hex(j.dump()); }

json base_report(const std::string& command) { return {{"command", command}, {"version", kVersion}}; }

int stage_rank(const std::string& kind) {
  if (kind == "quadratic") return 0;
  if (kind == "bilinear") return 1;
  if (kind == "pencil") return 2;
  if (kind == "tensor") return 3;
  throw UsageError("unknown stage '" + kind + "'");
}

bool verify_any(const Instance& inst, const WitnessQN& w) {
  struct Visitor {
    const WitnessQN& w;
    bool operator()(const QuadraticInstance& q) const { return verify_quadratic_witness(q, w.x); }
    bool operator()(const BilinearInstance& b) const { return verify_bilinear_witness(b, w.x, w.y); }
    bool operator()(const PencilInstance& p) const { return verify_pencil_witness(p, w); }
    bool operator()(const TensorQ& t) const { return verify_tensor_witness(t, w); }
  };
  return std::visit(Visitor{w}, inst);
}

json witness_json(const WitnessQN& w) {
  if (auto r = as_rational(w)) return encode_witness(*r);
  return encode_witness(w);
}

// One step along quadratic -> bilinear -> pencil -> tensor, carrying the
// witness along.
Instance step(const Instance& inst, ReductionTrace& trace, std::optional<WitnessQN>& w) {
  if (const auto* q = std::get_if<QuadraticInstance>(&inst)) {
    auto r = quad_to_bilinear(*q);
    trace.append(r.trace);
    if (w) {
      auto [x, y] = lift_quad_witness(w->x);
      w = WitnessQN{x, y, {}};
    }
    return r.instance;
  }
  if (const auto* b = std::get_if<BilinearInstance>(&inst)) {
    auto r = bilinear_to_pencil(*b);
    trace.append(r.trace);
    if (w) w = lift_bilinear_witness(w->x, w->y, r.instance.r());
    return r.instance;
  }
  const auto& p = std::get<PencilInstance>(inst);
  auto r = pencil_to_tensor(p);
  trace.append(r.trace);
  return r.instance;
}

int cmd_reduce(const std::string& in, const std::string& stage, const std::string& out,
               const std::string& witness_in, const std::string& witness_out) {
  const json source = read_json(in);
  Instance inst = decode_instance(source);
  const int target = stage_rank(stage);
  if (stage_rank(kind_name(inst)) > target) {
    throw UsageError("cannot reduce a " + kind_name(inst) + " instance to stage '" + stage + "'");
  }
  json report = base_report("reduce");
  report["inputs"] = {{"instance", digest(source)}};
  std::optional<WitnessQN> w;
  if (!witness_in.empty()) {
    const json wj = read_json(witness_in);
    report["inputs"]["witness"] = digest(wj);
    w = decode_witness(wj);
  }
  ReductionTrace trace;
  for (;;) {
    if (w && !verify_any(inst, *w)) {
      std::cerr << "error: witness does not verify at stage '" << kind_name(inst) << "'\n";
      report["witness_failure_stage"] = kind_name(inst);
      std::cout << report.dump(2) << "\n";
      return negative;
    }
    if (stage_rank(kind_name(inst)) == target) break;
    inst = step(inst, trace, w);
  }
  const json encoded = encode_instance(inst);
  report["stage"] = stage;
  report["trace"] = to_json(trace);
  report["output"] = {{"kind", kind_name(inst)}, {"digest", digest(encoded)}};
  if (inst.index() == 3) report["output"]["format"] = Format::of(std::get<TensorQ>(inst)).str();
  if (out.empty()) {
    report["instance"] = encoded;
  } else {
    write_json(out, encoded);
  }
  if (w) {
    report["witness"] = witness_json(*w);
    if (!witness_out.empty()) write_json(witness_out, witness_json(*w));
  }
  std::cout << report.dump(2) << "\n";
  return ok;
}

int cmd_verify(const std::string& in, const std::string& witness_path) {
  const json source = read_json(in);
  const Instance inst = decode_instance(source);
  const json wj = read_json(witness_path);
  const bool holds = verify_any(inst, decode_witness(wj));
  json report = base_report("verify");
  report["inputs"] = {{"instance", digest(source)}, {"witness", digest(wj)}};
  report["kind"] = kind_name(inst);
  report["verifies"] = holds;
  std::cout << report.dump(2) << "\n";
  return holds ? ok : negative;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::feasible_certified: return ok;
    case Outcome::infeasible_certified: return negative;
    case Outcome::unknown: return unknown;
  }
  return unknown;
}

// Decides a non-tensor instance on the composed tensor and extracts the
// witness back to the source.
Verdict decide_via_tensor(const Instance& inst, const SearchConfig& cfg, json& report) {
  Instance cur = inst;
  ReductionTrace trace;
  std::optional<WitnessQN> none;
  while (cur.index() != 3) cur = step(cur, trace, none);
  const auto& t = std::get<TensorQ>(cur);
  report["composed_format"] = Format::of(t).str();
  Verdict v = decide(t, cfg);
  if (v.outcome != Outcome::feasible_certified) {
    // Tensor-side certificates do not transfer verbatim.
    if (v.outcome == Outcome::infeasible_certified) report["tensor_certificate"] = to_json(v.certificate);
    v.certificate = std::monostate{};
    if (v.outcome == Outcome::infeasible_certified) v.method = "composed_tensor:" + v.method;
    return v;
  }
  WitnessQN w = std::holds_alternative<WitnessQ>(v.certificate) ? std::get<WitnessQ>(v.certificate).cast<QuadraticNumber>()
                                                                : std::get<WitnessQN>(v.certificate);
  if (const auto* q = std::get_if<QuadraticInstance>(&inst)) {
    w = WitnessQN{extract_quad_witness_from_tensor(*q, w), {}, {}};
  } else if (const auto* b = std::get_if<BilinearInstance>(&inst)) {
    const auto pencil = bilinear_to_pencil(*b).instance;
    auto [x, y] = extract_bilinear_witness(pencil, w);
    w = WitnessQN{x, y, {}};
  }
  if (auto r = as_rational(w)) {
    v.certificate = *r;
  } else {
    v.certificate = w;
  }
  v.method = "composed_tensor:" + v.method;
  return v;
}

int cmd_decide(const std::string& in, const SearchConfig& cfg) {
  const json source = read_json(in);
  const Instance inst = decode_instance(source);
  json report = base_report("decide");
  report["inputs"] = {{"instance", digest(source)}};
  report["kind"] = kind_name(inst);
  report["seed"] = cfg.seed;
  report["config"] = {{"restarts", cfg.restarts},
                      {"max_iterations", cfg.max_iterations},
                      {"tolerance", cfg.tolerance},
                      {"denominator_bound", cfg.denominator_bound}};
  Verdict v;
  if (const auto* t = std::get_if<TensorQ>(&inst)) {
    v = decide(*t, cfg);
  } else if (const auto* q = std::get_if<QuadraticInstance>(&inst)) {
    v = decide_quadratic(*q);
    if (v.outcome == Outcome::unknown) v = decide_via_tensor(inst, cfg, report);
  } else if (const auto* b = std::get_if<BilinearInstance>(&inst); b && b->n() == 2) {
    v = decide_bilinear_n2(*b);
  } else {
    v = decide_via_tensor(inst, cfg, report);
  }
  report["verdict"] = to_json(v);
  std::cout << report.dump(2) << "\n";
  return exit_for(v.outcome);
}

int cmd_hyperdet(const std::string& in, bool degree) {
  const json source = read_json(in);
  const Instance inst = decode_instance(source);
  const auto* t = std::get_if<TensorQ>(&inst);
  if (!t) throw UsageError("hyperdet needs a tensor instance");
  json report = base_report("hyperdet");
  report["inputs"] = {{"instance", digest(source)}};
  report["format"] = Format::of(*t).str();
  report["result"] = to_json(hyperdet(*t));
  if (degree) report["degree"] = hyperdet_degree(Format::of(*t));
  std::cout << report.dump(2) << "\n";
  return ok;
}

struct CompleteOptions {
  bool sz = false;
  std::string hit;
  bool pit = false;
  Index trials = 20;
  std::int64_t sample_bound = std::int64_t{1} << 20;
};

int cmd_complete(const std::string& in, const CompleteOptions& o, std::optional<std::uint64_t> seed) {
  const int modes = int(o.sz) + int(!o.hit.empty()) + int(o.pit);
  if (modes != 1) throw UsageError("complete needs exactly one of --sz, --hit, --pit");
  if ((o.sz || o.pit) && !seed) throw UsageError("--seed is required for randomized completion tests");
  const json source = read_json(in);
  const Instance inst = decode_instance(source);
  const auto* t = std::get_if<TensorQ>(&inst);
  if (!t) throw UsageError("complete needs a tensor instance");
  const auto tpl = build_template(Format::of(*t));
  json report = base_report("complete");
  report["inputs"] = {{"instance", digest(source)}};
  report["template"] = to_json(tpl);
  if (seed) report["seed"] = *seed;
  if (o.sz) {
    report["sz"] = to_json(sz_test(*t, tpl, o.trials, o.sample_bound, *seed));
  } else if (o.pit) {
    report["pit"] = to_json(completion_pit(*t, tpl, {o.trials, o.sample_bound, *seed}));
  } else {
    const auto strategy = parse_hitting_strategy(o.hit);
    const auto point = hitting_attempt(*t, tpl, strategy);
    report["hit"] = {{"strategy", to_string(strategy)},
                     {"point", point ? encode_vector(*point) : json(nullptr)}};
    if (point) report["hit"]["value"] = to_string(eval_completion(*t, tpl, *point));
  }
  std::cout << report.dump(2) << "\n";
  return ok;
}

int cmd_gen(bool degenerate, bool random, const std::string& format, std::uint64_t seed,
            std::int64_t bound, const std::string& out, const std::string& witness_out) {
  if (degenerate == random) throw UsageError("gen needs exactly one of --degenerate, --random");
  const Format f = Format::parse(format);
  json report = base_report("gen");
  report["seed"] = seed;
  report["format"] = f.str();
  json tensor;
  if (degenerate) {
    const auto sample = degenerate_generator(f, seed);
    tensor = encode_instance(Instance{sample.tensor});
    const json w = encode_witness(sample.witness);
    report["witness"] = w;
    if (!witness_out.empty()) write_json(witness_out, w);
  } else {
    if (bound < 1) throw UsageError("--bound must be positive");
    Rng rng(seed);
    tensor = encode_instance(Instance{random_integer_tensor(f, bound, rng)});
    report["bound"] = bound;
  }
  report["output"] = {{"digest", digest(tensor)}};
  if (out.empty()) {
    report["instance"] = tensor;
  } else {
    write_json(out, tensor);
  }
  std::cout << report.dump(2) << "\n";
  return ok;
}

int cmd_demo(const std::string& name, Index n, std::optional<std::uint64_t> seed,
             const std::vector<Index>& indices) {
  json report = base_report("demo");
  FailureDemo d;
  if (name == "direct_sum") {
    if (!seed) throw UsageError("--seed is required for the direct_sum demo");
    report["seed"] = *seed;
    d = demo_direct_sum_failure(*seed);
    report["hyperdet_T"] = to_json(hyperdet(d.tensors[0]));
  } else if (name == "pairwise" || name == "vandermonde") {
    Index i = 0, j = 1, k = 2;
    if (!indices.empty()) {
      if (indices.size() != 3) throw UsageError("--indices takes three values");
      i = indices[0];
      j = indices[1];
      k = indices[2];
    }
    report["n"] = n;
    d = name == "pairwise" ? demo_disjoint_support(n, i, j, k) : demo_vandermonde_failure(n, i, j, k);
  } else {
    throw UsageError("unknown demo '" + name + "' (direct_sum, pairwise, vandermonde)");
  }
  report["demo"] = to_json(d);
  report["reverified"] = reverify(d);
  std::cout << report.dump(2) << "\n";
  return reverify(d) ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for real 3-tensor degeneracy and its reductions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string in, out, witness, witness_out, stage = "tensor", format, hit, demo_name;
  std::optional<std::uint64_t> seed;
  SearchConfig cfg;
  CompleteOptions copt;
  bool degree = false, degenerate = false, random = false;
  std::int64_t bound = 3;
  Index n = 3;
  std::vector<Index> indices;

  auto* reduce = app.add_subcommand("reduce", "Reduce an instance along quadratic -> bilinear -> pencil -> tensor");
  reduce->add_option("--in", in, "Instance file")->required();
  reduce->add_option("--stage", stage, "Target stage: bilinear, pencil or tensor");
  reduce->add_option("--out", out, "Write the reduced instance here");
  reduce->add_option("--witness", witness, "Witness file to transport");
  reduce->add_option("--witness-out", witness_out, "Write the transported witness here");

  auto* verify = app.add_subcommand("verify", "Exactly verify a witness (exit 0 verifies, 1 fails, 2 malformed)");
  verify->add_option("--in", in, "Instance file")->required();
  verify->add_option("--witness", witness, "Witness file")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Decide feasibility (exit 0 feasible, 1 infeasible, 3 unknown)");
  decide_cmd->add_option("--in", in, "Instance file")->required();
  decide_cmd->add_option("--seed", seed, "Search master seed (default 0)");
  decide_cmd->add_option("--restarts", cfg.restarts, "Search restarts");
  decide_cmd->add_option("--tolerance", cfg.tolerance, "Residual tolerance");
  decide_cmd->add_option("--denominator-bound", cfg.denominator_bound, "Rounding denominator bound");

  auto* hd = app.add_subcommand("hyperdet", "Exact hyperdeterminant of a supported boundary tensor");
  hd->add_option("--in", in, "Tensor file")->required();
  hd->add_flag("--degree", degree, "Also measure the homogeneity degree");

  auto* complete = app.add_subcommand("complete", "Completion polynomial experiments");
  complete->add_option("--in", in, "Tensor file")->required();
  complete->add_flag("--sz", copt.sz, "Randomized evaluation test");
  complete->add_option("--hit", copt.hit, "Deterministic strategy: zeros, unit_points, coordinate_ramp");
  complete->add_flag("--pit", copt.pit, "Strategies, then the randomized test");
  complete->add_option("--trials", copt.trials, "Random trials");
  complete->add_option("--sample-bound", copt.sample_bound, "Coordinates are drawn from [0, bound)");
  complete->add_option("--seed", seed, "Master seed");

  auto* gen = app.add_subcommand("gen", "Generate tensors");
  gen->add_flag("--degenerate", degenerate, "Degenerate tensor with a planted witness");
  gen->add_flag("--random", random, "Random integer tensor");
  gen->add_option("--format", format, "Format, e.g. 3,2,2")->required();
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--bound", bound, "Entry bound for --random");
  gen->add_option("--out", out, "Tensor file");
  gen->add_option("--witness", witness_out, "Witness file for --degenerate");

  auto* demo = app.add_subcommand("demo", "Counterexamples to deterministic embeddings");
  demo->add_option("name", demo_name, "direct_sum, pairwise or vandermonde")->required();
  demo->add_option("--n", n, "Dimension for pairwise and vandermonde");
  demo->add_option("--indices", indices, "Support indices i j k (0-based)")->delimiter(',');
  demo->add_option("--seed", seed, "Seed for direct_sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : malformed;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = ok;
  try {
    if (*reduce) {
      code = cmd_reduce(in, stage, out, witness, witness_out);
    } else if (*verify) {
      code = cmd_verify(in, witness);
    } else if (*decide_cmd) {
      cfg.seed = seed.value_or(0);
      cfg.validate();
      code = cmd_decide(in, cfg);
    } else if (*hd) {
      code = cmd_hyperdet(in, degree);
    } else if (*complete) {
      code = cmd_complete(in, copt, seed);
    } else if (*gen) {
      code = cmd_gen(degenerate, random, format, *seed, bound, out, witness_out);
    } else if (*demo) {
      code = cmd_demo(demo_name, n, seed, indices);
    }
  } catch (const DemoRejected& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return negative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return malformed;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "elapsed_ms: " << ms << "\n";
  return code;
}
