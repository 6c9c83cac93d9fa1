// JSON schemas for field contexts, codes, words and decode results.
// Digits are serialized low-to-high throughout.
#pragma once

#include <string>

#include <json.hpp>

#include "gabidulin/code.hpp"
#include "gabidulin/decoder.hpp"
#include "gabidulin/field.hpp"
#include "gabidulin/linpoly.hpp"
#include "gabidulin/oracle.hpp"

namespace gabidulin {

using json = nlohmann::json;

// { "q": 2, "m": 3, "modulus": [1,1,0,1] }
json field_to_json(const Field& F);
FieldPtr field_from_json(const json& j);

// [v1,...,vm]
json element_to_json(const FieldElement& e);
FieldElement element_from_json(const json& j, const Field& F);

// [[...],[...],...]
json word_to_json(const Word& w);
Word word_from_json(const json& j, const Field& F);

// Coefficient list, index i = coefficient of x^(q^i).
json linpoly_to_json(const LinPoly& p);
LinPoly linpoly_from_json(const json& j, const FieldPtr& F);

// { "field": {...}, "n": 3, "k": 2, "g": [[...],...] }
json code_to_json(const Code& c);
Code code_from_json(const json& j);

// { "elements": [...] }
json word_file_to_json(const Word& w);
Word word_file_from_json(const json& j, const Field& F);

// { "distance": 1, "messages": [ { "coeffs": [...], "codeword": [...] } ] }
json decode_result_to_json(const DecodeResult& r);
DecodeResult decode_result_from_json(const json& j, const FieldPtr& F);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace gabidulin
