#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "tensordeg/instances.hpp"

namespace tensordeg {

using Instance = std::variant<QuadraticInstance, BilinearInstance, PencilInstance, TensorQ>;

/// "quadratic", "bilinear", "pencil" or "tensor".
std::string kind_name(const Instance& inst);

// Instance files:
//   {"kind": "quadratic", "n": 2, "m": 1, "matrices": [[["1","0"],["0","-1"]]]}
//   {"kind": "bilinear",  "n": 2, "r": 1, "matrices": [...]}
//   {"kind": "pencil",    "n": 2, "r": 1, "matrices": [A_0, ..., A_r]}
//   {"kind": "tensor",    "dims": [n1, n2, n3], "slices": [T(:,:,1), ..., T(:,:,n3)]}
// Matrices are arrays of rows; every entry is a "p/q" string.
nlohmann::json encode_instance(const Instance& inst);
/// Throws InvalidInput on schema violations.
Instance decode_instance(const nlohmann::json& j);

nlohmann::json encode_matrix(const MatrixQ& m);
MatrixQ decode_matrix(const nlohmann::json& j);

// Witness files: {"x": [...], "y": [...], "z": [...]}, absent members for
// quadratic (x only) and bilinear (x, y) witnesses. Rational entries are
// "p/q" strings. An algebraic witness adds "radicand": "d" and may write an
// entry a + b*sqrt(d) as the pair ["a", "b"].
nlohmann::json encode_witness(const WitnessQ& w);
nlohmann::json encode_witness(const WitnessTriple<QuadraticNumber>& w);
WitnessTriple<QuadraticNumber> decode_witness(const nlohmann::json& j);

/// 64-bit FNV-1a hash of `bytes`, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// The witness with rational entries, when it has no irrational coordinate.
std::optional<WitnessQ> as_rational(const WitnessTriple<QuadraticNumber>& w);

}  // namespace tensordeg
