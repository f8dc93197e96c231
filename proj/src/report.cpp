#include "tensordeg/report.hpp"

#include "tensordeg/io.hpp"

using nlohmann::json;

namespace tensordeg {

json encode_vector(const VectorQ& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

json to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

namespace {

json cells(const std::vector<Cell>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({c[0], c[1], c[2]});
  return out;
}

json qn_vector(const Vector<QuadraticNumber>& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

json chart_json(const SturmChart& c) {
  json polys = json::array();
  for (const auto& p : c.polynomials) polys.push_back(to_json(p));
  json out = {{"chart", c.chart}, {"polynomials", polys}, {"gcd", to_json(c.gcd)}, {"real_roots", c.real_roots}};
  if (c.simple_roots) out["simple_roots"] = true;
  if (!c.excluded.empty()) {
    json excluded = json::array();
    for (const auto& e : c.excluded) {
      excluded.push_back({{"parameter", e.parameter.str()},
                          {"left", qn_vector(e.left)},
                          {"right", qn_vector(e.right)},
                          {"pairing", e.pairing.str()}});
    }
    out["excluded_roots"] = excluded;
  }
  return out;
}

}  // namespace

json to_json(const Certificate& c) {
  struct Visitor {
    json operator()(const std::monostate&) const { return nullptr; }
    json operator()(const WitnessQ& w) const { return {{"type", "witness"}, {"witness", encode_witness(w)}}; }
    json operator()(const WitnessQN& w) const {
      return {{"type", "witness"}, {"witness", encode_witness(w)}};
    }
    json operator()(const DefinitenessCertificate& d) const {
      return {{"type", "definiteness"},
              {"form_index", d.form_index},
              {"kind", to_string(d.kind)},
              {"diagonal", encode_vector(d.diagonalization.diagonal)},
              {"basis", encode_matrix(d.diagonalization.basis)}};
    }
    json operator()(const SturmCertificate& s) const {
      json charts = json::array();
      for (const auto& c : s.charts) charts.push_back(chart_json(c));
      json out = {{"type", "sturm"}, {"charts", charts}};
      if (s.mode >= 0) out["mode"] = s.mode;
      return out;
    }
    json operator()(const HyperdetCertificate& h) const {
      json out = to_json(h.result);
      out["type"] = "hyperdeterminant";
      return out;
    }
    json operator()(const RankCertificate& r) const {
      return {{"type", "rank"}, {"side", r.side}, {"rank", r.rank}, {"dimension", r.dimension}};
    }
  };
  return std::visit(Visitor{}, c);
}

json to_json(const SearchStats& s) {
  return {{"restarts", s.restarts},
          {"iterations", s.iterations},
          {"converged", s.converged},
          {"rounding_attempts", s.rounding_attempts},
          {"best_residual", s.best_residual}};
}

json to_json(const Verdict& v) {
  return {{"outcome", to_string(v.outcome)},
          {"method", v.method},
          {"certificate", to_json(v.certificate)},
          {"stats", to_json(v.stats)}};
}

json to_json(const HyperdetResult& r) {
  return {{"value", to_string(r.value)},
          {"method", to_string(r.method)},
          {"format_used", r.format_used.str()},
          {"permutation", {r.permutation[0], r.permutation[1], r.permutation[2]}}};
}

json to_json(const CompletionTemplate& tpl) {
  json placement = json::array();
  for (const auto& [from, to] : tpl.placement) {
    placement.push_back({{"from", {from[0], from[1], from[2]}}, {"to", {to[0], to[1], to[2]}}});
  }
  json fixed = json::array();
  for (const auto& [c, value] : tpl.fixed_cells) {
    fixed.push_back({{"cell", {c[0], c[1], c[2]}}, {"value", to_string(value)}});
  }
  return {{"family", tpl.family()},
          {"input", tpl.input.str()},
          {"target", tpl.target.str()},
          {"placement", placement},
          {"free_cells", cells(tpl.free_cells)},
          {"fixed_cells", fixed}};
}

json to_json(const SZReport& r) {
  json evals = json::array();
  for (const auto& e : r.evaluations) evals.push_back({{"digest", e.digest}, {"zero", e.zero}});
  json out = {{"trials", r.trials},
              {"sample_bound", r.sample_bound},
              {"seed", r.seed},
              {"evaluations", evals},
              {"verdict", to_string(r.verdict)}};
  out["hitting_point"] = r.hitting_point ? encode_vector(*r.hitting_point) : json(nullptr);
  return out;
}

json to_json(const PitResult& r) {
  json out = {{"outcome", to_string(r.outcome)}, {"found_by", r.found_by}};
  out["point"] = r.point ? encode_vector(*r.point) : json(nullptr);
  out["sz"] = r.sz ? to_json(*r.sz) : json(nullptr);
  return out;
}

json to_json(const FailureDemo& d) {
  json tensors = json::array();
  for (const auto& t : d.tensors) tensors.push_back(encode_instance(Instance{t}));
  json witnesses = json::array();
  for (const auto& w : d.witnesses) witnesses.push_back(encode_witness(w));
  json checks = json::object();
  for (const auto& c : d.checks) checks[c.name] = c.holds;
  return {{"tag", to_string(d.tag)}, {"tensors", tensors}, {"witnesses", witnesses}, {"checks", checks}};
}

}  // namespace tensordeg
