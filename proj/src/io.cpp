#include "tensordeg/io.hpp"

#include <cstdio>

using nlohmann::json;

namespace tensordeg {

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Index index_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
  return v.get<Index>();
}

Rational decode_rational(const json& v) {
  if (!v.is_string()) throw InvalidInput("rational entries must be \"p/q\" strings");
  return parse_rational(v.get<std::string>());
}

json encode_vector(const VectorQ& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

json encode_slices(const std::vector<MatrixQ>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(encode_matrix(m));
  return out;
}

std::vector<MatrixQ> decode_slices(const json& j) {
  if (!j.is_array()) throw InvalidInput("'matrices' must be an array");
  std::vector<MatrixQ> out;
  for (const auto& m : j) out.push_back(decode_matrix(m));
  return out;
}

void expect_count(const json& j, const char* key, Index want) {
  if (j.contains(key) && index_member(j, key) != want) {
    throw InvalidInput(std::string("field '") + key + "' disagrees with the matrices");
  }
}

}  // namespace

std::string kind_name(const Instance& inst) {
  return std::visit(Overloaded{[](const QuadraticInstance&) { return "quadratic"; },
                               [](const BilinearInstance&) { return "bilinear"; },
                               [](const PencilInstance&) { return "pencil"; },
                               [](const TensorQ&) { return "tensor"; }},
                    inst);
}

json encode_matrix(const MatrixQ& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(encode_vector(m.row(i).transpose()));
  return rows;
}

MatrixQ decode_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  if (!j.front().is_array() || j.front().empty()) throw InvalidInput("matrix rows must be non-empty arrays");
  const Index cols = static_cast<Index>(j.front().size());
  MatrixQ m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw InvalidInput("matrix rows differ in length");
    }
    for (Index c = 0; c < cols; ++c) m(i, c) = decode_rational(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json encode_instance(const Instance& inst) {
  return std::visit(
      Overloaded{
          [](const QuadraticInstance& q) {
            return json{{"kind", "quadratic"}, {"n", q.n()}, {"m", q.m()},
                        {"matrices", encode_slices(q.forms())}};
          },
          [](const BilinearInstance& b) {
            return json{{"kind", "bilinear"}, {"n", b.n()}, {"r", b.r()},
                        {"matrices", encode_slices(b.matrices())}};
          },
          [](const PencilInstance& p) {
            return json{{"kind", "pencil"}, {"n", p.n()}, {"r", p.r()},
                        {"matrices", encode_slices(p.matrices())}};
          },
          [](const TensorQ& t) {
            const auto d = t.dims();
            return json{{"kind", "tensor"}, {"dims", {d[0], d[1], d[2]}},
                        {"slices", encode_slices(t.slices())}};
          }},
      inst);
}

Instance decode_instance(const json& j) {
  const json& kind_j = member(j, "kind");
  if (!kind_j.is_string()) throw InvalidInput("'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "tensor") {
    const json& dims = member(j, "dims");
    if (!dims.is_array() || dims.size() != 3) throw InvalidInput("'dims' must hold three integers");
    TensorQ t(decode_slices(member(j, "slices")));
    for (std::size_t m = 0; m < 3; ++m) {
      if (!dims[m].is_number_integer() || dims[m].get<Index>() != t.dims()[m]) {
        throw InvalidInput("'dims' disagrees with the slices");
      }
    }
    return t;
  }
  auto ms = decode_slices(member(j, "matrices"));
  if (kind == "quadratic") {
    QuadraticInstance q(std::move(ms));
    expect_count(j, "n", q.n());
    expect_count(j, "m", q.m());
    return q;
  }
  if (kind == "bilinear") {
    BilinearInstance b(std::move(ms));
    expect_count(j, "n", b.n());
    expect_count(j, "r", b.r());
    return b;
  }
  if (kind == "pencil") {
    PencilInstance p(std::move(ms));
    expect_count(j, "n", p.n());
    expect_count(j, "r", p.r());
    return p;
  }
  throw InvalidInput("unknown instance kind '" + kind + "'");
}

json encode_witness(const WitnessQ& w) {
  json out = json::object();
  if (w.x.size() > 0) out["x"] = encode_vector(w.x);
  if (w.y.size() > 0) out["y"] = encode_vector(w.y);
  if (w.z.size() > 0) out["z"] = encode_vector(w.z);
  return out;
}

json encode_witness(const WitnessTriple<QuadraticNumber>& w) {
  if (auto rational = as_rational(w)) return encode_witness(*rational);
  Integer radicand = 0;
  auto encode = [&](const Vector<QuadraticNumber>& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i).is_rational()) {
        out.push_back(to_string(v(i).rational_part()));
      } else {
        radicand = v(i).radicand();
        out.push_back(json::array({to_string(v(i).rational_part()), to_string(v(i).irrational_part())}));
      }
    }
    return out;
  };
  json out = json::object();
  if (w.x.size() > 0) out["x"] = encode(w.x);
  if (w.y.size() > 0) out["y"] = encode(w.y);
  if (w.z.size() > 0) out["z"] = encode(w.z);
  out["radicand"] = radicand.str();
  return out;
}

WitnessTriple<QuadraticNumber> decode_witness(const json& j) {
  if (!j.is_object()) throw InvalidInput("witness must be a JSON object");
  Integer radicand = 0;
  if (j.contains("radicand")) {
    const Rational d = decode_rational(j.at("radicand"));
    if (denominator(d) != 1 || d.sign() <= 0) throw InvalidInput("radicand must be a positive integer");
    radicand = numerator(d);
  }
  auto decode = [&](const char* key) {
    Vector<QuadraticNumber> v;
    if (!j.contains(key)) return v;
    const json& arr = j.at(key);
    if (!arr.is_array()) throw InvalidInput(std::string("witness '") + key + "' must be an array");
    v.resize(static_cast<Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& e = arr[i];
      if (e.is_array()) {
        if (e.size() != 2) throw InvalidInput("algebraic entries are [a, b] pairs");
        if (radicand == 0) throw InvalidInput("algebraic entry without a radicand");
        v(static_cast<Index>(i)) = QuadraticNumber(decode_rational(e[0]), decode_rational(e[1]), radicand);
      } else {
        v(static_cast<Index>(i)) = QuadraticNumber(decode_rational(e));
      }
    }
    return v;
  };
  return {decode("x"), decode("y"), decode("z")};
}

std::optional<WitnessQ> as_rational(const WitnessTriple<QuadraticNumber>& w) {
  auto convert = [](const Vector<QuadraticNumber>& v, VectorQ& out) {
    out.resize(v.size());
    for (Index i = 0; i < v.size(); ++i) {
      if (!v(i).is_rational()) return false;
      out(i) = v(i).rational_part();
    }
    return true;
  };
  WitnessQ out;
  if (convert(w.x, out.x) && convert(w.y, out.y) && convert(w.z, out.z)) return out;
  return std::nullopt;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tensordeg
