#pragma once

#include <json.hpp>

#include "tensordeg/completion.hpp"
#include "tensordeg/degeneracy.hpp"
#include "tensordeg/failures.hpp"
#include "tensordeg/hyperdet.hpp"

namespace tensordeg {

// JSON views of results, used by the command-line reports. Rationals are
// "p/q" strings; witnesses follow the witness file schema of io.hpp so
// they can be written out and re-verified.

nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const SearchStats& s);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const HyperdetResult& r);
nlohmann::json to_json(const CompletionTemplate& tpl);
nlohmann::json to_json(const SZReport& r);
nlohmann::json to_json(const PitResult& r);
nlohmann::json to_json(const FailureDemo& d);

nlohmann::json encode_vector(const VectorQ& v);

}  // namespace tensordeg
