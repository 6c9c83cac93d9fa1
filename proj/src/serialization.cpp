#include "gabidulin/serialization.hpp"

#include <fstream>

namespace gabidulin {

namespace {

std::vector<Digit> digits_from_json(const json& j) {
    if (!j.is_array()) throw Error(errc::parse_error, "expected a digit array");
    std::vector<Digit> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned())
            throw Error(errc::parse_error, "digits must be non-negative integers");
        out.push_back(v.get<Digit>());
    }
    return out;
}

}  // namespace

json field_to_json(const Field& F) {
    return json{{"q", F.q()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("m") || !j.contains("modulus"))
        throw Error(errc::parse_error, "field needs q, m and modulus");
    return Field::make(j.at("q").get<Digit>(), j.at("m").get<int>(),
                       digits_from_json(j.at("modulus")));
}

json element_to_json(const FieldElement& e) { return json(e.digits()); }

FieldElement element_from_json(const json& j, const Field& F) {
    return F.from_digits(digits_from_json(j));
}

json word_to_json(const Word& w) {
    json out = json::array();
    for (const FieldElement& e : w) out.push_back(element_to_json(e));
    return out;
}

Word word_from_json(const json& j, const Field& F) {
    if (!j.is_array()) throw Error(errc::parse_error, "expected an array of elements");
    Word out;
    for (const auto& e : j) out.push_back(element_from_json(e, F));
    return out;
}

json linpoly_to_json(const LinPoly& p) { return word_to_json(p.coeffs()); }

LinPoly linpoly_from_json(const json& j, const FieldPtr& F) {
    return LinPoly(F, word_from_json(j, *F));
}

json code_to_json(const Code& c) {
    return json{{"field", field_to_json(*c.field())},
                {"n", c.n()},
                {"k", c.k()},
                {"g", word_to_json(c.g())}};
}

Code code_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("k") ||
        !j.contains("g"))
        throw Error(errc::parse_error, "code needs field, n, k and g");
    FieldPtr F = field_from_json(j.at("field"));
    Word g = word_from_json(j.at("g"), *F);
    return Code(std::move(F), j.at("n").get<int>(), j.at("k").get<int>(), std::move(g));
}

json word_file_to_json(const Word& w) { return json{{"elements", word_to_json(w)}}; }

Word word_file_from_json(const json& j, const Field& F) {
    if (!j.is_object() || !j.contains("elements"))
        throw Error(errc::parse_error, "word file needs an elements array");
    return word_from_json(j.at("elements"), F);
}

json decode_result_to_json(const DecodeResult& r) {
    json messages = json::array();
    for (const DecodeEntry& e : r.entries)
        messages.push_back(json{{"coeffs", linpoly_to_json(e.message)},
                                {"codeword", word_to_json(e.codeword)}});
    return json{{"distance", r.distance}, {"messages", messages}};
}

DecodeResult decode_result_from_json(const json& j, const FieldPtr& F) {
    if (!j.is_object() || !j.contains("distance") || !j.contains("messages"))
        throw Error(errc::parse_error, "decode result needs distance and messages");
    DecodeResult out;
    out.distance = j.at("distance").get<int>();
    for (const auto& m : j.at("messages"))
        out.entries.push_back(
            {linpoly_from_json(m.at("coeffs"), F), word_from_json(m.at("codeword"), *F)});
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(errc::parse_error, "cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace gabidulin
