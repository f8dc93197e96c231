#include "tensordeg/reductions.hpp"

namespace tensordeg {

nlohmann::json to_json(const ReductionTrace& trace) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : trace.stages) {
    stages.push_back({{"stage", s.name}, {"sizes", s.sizes}, {"provenance", s.provenance}});
  }
  return stages;
}

MatrixQ minor_matrix(Index n, Index i, Index j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw DimensionError("minor_matrix: need distinct indices below " + std::to_string(n));
  }
  MatrixQ e = MatrixQ::Zero(n, n);
  e(i, j) = 1;
  e(j, i) = -1;
  return e;
}

Reduced<BilinearInstance> quad_to_bilinear(const QuadraticInstance& q) {
  const Index n = q.n();
  std::vector<MatrixQ> ms = q.forms();
  StageTrace st{"quadratic_to_bilinear", {{"n", n}, {"m", q.m()}}, {}};
  for (Index t = 0; t < q.m(); ++t) st.provenance.push_back("Q_" + std::to_string(t + 1));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      ms.push_back(minor_matrix(n, i, j));
      st.provenance.push_back("minor(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  st.sizes["r"] = static_cast<Index>(ms.size());
  return {BilinearInstance(std::move(ms)), {{st}}};
}

Reduced<PencilInstance> bilinear_to_pencil(const BilinearInstance& b) {
  std::vector<MatrixQ> as;
  as.reserve(b.matrices().size() + 1);
  as.push_back(MatrixQ::Zero(b.n(), b.n()));
  as.insert(as.end(), b.matrices().begin(), b.matrices().end());
  StageTrace st{"bilinear_to_pencil", {{"n", b.n()}, {"r", b.r()}}, {"A_0=0"}};
  for (Index l = 1; l <= b.r(); ++l) st.provenance.push_back("M_" + std::to_string(l));
  return {PencilInstance(std::move(as)), {{st}}};
}

Reduced<TensorQ> pencil_to_tensor(const PencilInstance& p) {
  StageTrace st{"pencil_to_tensor", {{"n", p.n()}, {"r", p.r()}, {"slices", p.r() + 1}}, {}};
  for (Index l = 0; l <= p.r(); ++l) st.provenance.push_back("A_" + std::to_string(l));
  return {TensorQ(p.matrices()), {{st}}};
}

Reduced<TensorQ> quad_to_tensor(const QuadraticInstance& q) {
  auto b = quad_to_bilinear(q);
  auto p = bilinear_to_pencil(b.instance);
  auto t = pencil_to_tensor(p.instance);
  ReductionTrace trace = b.trace;
  trace.append(p.trace);
  trace.append(t.trace);
  return {std::move(t.instance), std::move(trace)};
}

}  // namespace tensordeg
