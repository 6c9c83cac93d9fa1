// Command-line front end: generate codes, encode, corrupt, decode (list or
// unique), run the brute-force oracle, replay the worked decoding example
// against pinned fixtures, and run the property self-test battery.
//
// Exit codes: 0 success, 1 decode-level failure, 2 usage or input error.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gabidulin/decoder.hpp"
#include "gabidulin/linalg.hpp"
#include "gabidulin/oracle.hpp"
#include "gabidulin/selftest.hpp"
#include "gabidulin/serialization.hpp"

using namespace gabidulin;

namespace {

constexpr int kExitDecodeFailure = 1;
constexpr int kExitInputError = 2;

std::string element_str(const Field& F, const FieldElement& e) {
    std::string s = F.digits_string(e);
    if (F.has_exp_table()) s += "=" + F.to_string(e);
    return s;
}

std::string word_str(const Field& F, const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += element_str(F, w[i]);
    }
    return s + "]";
}

void emit_result(const Field& F, const DecodeResult& res, const std::string& out_path,
                 const std::string& format) {
    const json j = decode_result_to_json(res);
    if (!out_path.empty()) write_json_file(out_path, j);
    if (format == "json") {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "minimal distance: " << res.distance << '\n';
        std::cout << res.entries.size() << " closest codeword(s):\n";
        for (const auto& e : res.entries)
            std::cout << "  message " << e.message.to_string() << "  codeword "
                      << word_str(F, e.codeword) << '\n';
    }
}

std::vector<Digit> parse_digit_csv(const std::string& s) {
    std::vector<Digit> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(static_cast<Digit>(std::stoul(item)));
        } catch (const std::exception&) {
            throw Error(errc::parse_error, "bad digit list: " + s);
        }
    }
    return out;
}

int cmd_codegen(Digit q, int m, int n, int k, const std::string& modulus_csv,
                const std::string& g_json, const std::string& out_path) {
    FieldPtr F = modulus_csv.empty() ? Field::make(q, m)
                                     : Field::make(q, m, parse_digit_csv(modulus_csv));
    Code code = g_json.empty() ? Code::standard(F, n, k)
                               : Code(F, n, k, word_from_json(json::parse(g_json), *F));
    const json j = code_to_json(code);
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(out_path, j);
    return 0;
}

int cmd_encode(const std::string& code_path, const std::string& msg_json,
               const std::string& in_path, const std::string& out_path) {
    const Code code = code_from_json(read_json_file(code_path));
    Word coeffs;
    if (!msg_json.empty())
        coeffs = word_from_json(json::parse(msg_json), *code.field());
    else if (!in_path.empty())
        coeffs = word_file_from_json(read_json_file(in_path), *code.field());
    else
        throw Error(errc::parse_error, "encode needs --msg or --in");
    const Word cw = code.encode(coeffs);
    const json j = word_file_to_json(cw);
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(out_path, j);
    return 0;
}

int cmd_corrupt(const std::string& code_path, const std::string& in_path, int rank,
                std::uint64_t seed, const std::string& out_path) {
    const Code code = code_from_json(read_json_file(code_path));
    const Field& F = *code.field();
    Word w = word_file_from_json(read_json_file(in_path), F);
    if (static_cast<int>(w.size()) != code.n())
        throw Error(errc::length_mismatch, "word length does not match the code");
    const Word e = random_error(code, rank, seed);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = F.add(w[i], e[i]);
    const json j = word_file_to_json(w);
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(out_path, j);
    return 0;
}

int cmd_decode(const std::string& code_path, const std::string& in_path,
               const std::string& out_path, const std::string& format, std::uint64_t budget,
               bool unique) {
    const Code code = code_from_json(read_json_file(code_path));
    const Word r = word_file_from_json(read_json_file(in_path), *code.field());
    if (unique) {
        try {
            const DecodeEntry entry = decode_unique(code, r, budget);
            DecodeResult res;
            res.distance = rank_distance(*code.field(), entry.codeword, r);
            res.entries.push_back(entry);
            emit_result(*code.field(), res, out_path, format);
            return 0;
        } catch (const AmbiguousError& e) {
            std::cerr << "ambiguous: " << e.result().entries.size()
                      << " codewords at distance " << e.result().distance << '\n';
            return kExitDecodeFailure;
        }
    }
    emit_result(*code.field(), list_decode(code, r, budget), out_path, format);
    return 0;
}

int cmd_oracle(const std::string& code_path, const std::string& in_path,
               const std::string& out_path, const std::string& format, std::uint64_t budget,
               bool histogram) {
    const Code code = code_from_json(read_json_file(code_path));
    const Word r = word_file_from_json(read_json_file(in_path), *code.field());
    const OracleResult orc = oracle_closest(code, r, budget);
    DecodeResult res;
    res.distance = orc.min_distance;
    res.entries = orc.closest;
    if (histogram) {
        json j = decode_result_to_json(res);
        json h = json::object();
        for (const auto& [d, c] : orc.histogram) h[std::to_string(d)] = c;
        j["histogram"] = h;
        if (!out_path.empty()) write_json_file(out_path, j);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    emit_result(*code.field(), res, out_path, format);
    return 0;
}

// Replays the decoding walkthrough on the F_8 code with g = (1, a, a^2) and
// r = (a+1, 0, a), checking every intermediate value against pinned fixtures.
int cmd_demo() {
    auto F = Field::make(2, 3, {1, 1, 0, 1});
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "   ok: " : " FAIL: ") << what << '\n';
        if (!ok) ++failures;
    };
    auto poly_ae = [&](const std::vector<long>& exps) {
        std::vector<FieldElement> coeffs;
        for (long e : exps)
            coeffs.push_back(e < 0 ? F->zero() : F->alpha_pow(static_cast<std::uint64_t>(e)));
        return LinPoly(F, std::move(coeffs));
    };

    std::cout << "Gabidulin code over F_8 = F_2[a]/(a^3 + a + 1), n = 3, k = 2\n";
    const Code code = Code::standard(F, 3, 2);
    std::cout << "g = " << word_str(*F, code.g()) << '\n';
    const Word r = {F->alpha_pow(3), F->zero(), F->alpha()};
    std::cout << "r = " << word_str(*F, r) << '\n';

    const InterpolationBasis ib = interpolation_module(code, r);
    std::cout << "Pi(x)     = " << ib.row1.f1.to_string() << '\n';
    std::cout << "Lambda(x) = " << (-ib.row2.f1).to_string() << '\n';
    check(ib.row1.f1 == poly_ae({0, -1, -1, 0}), "Pi(x) = x^8 + x");
    check(-ib.row2.f1 == poly_ae({5, -1, 2}), "Lambda(x) = a^2*x^4 + a^5*x");

    const auto [quot, rem] = left_divide(ib.row1.f1, -ib.row2.f1);
    std::cout << "Euclid: x^8 + x = (" << quot.to_string() << ") o (Lambda) + "
              << rem.to_string() << '\n';
    check(quot == LinPoly::monomial(F, 1, F->alpha_pow(3)), "quotient = a^3*x^2");
    check(rem == poly_ae({0, 6}), "remainder = a^6*x^2 + x");

    const MinimalBasis mb = minimal_basis(ib, code.k());
    std::cout << "minimal basis:\n";
    std::cout << "  g1 = [" << mb.g1.f1.to_string() << ", " << mb.g1.f2.to_string() << "]\n";
    std::cout << "  g2 = [" << mb.g2.f1.to_string() << ", " << mb.g2.f2.to_string() << "]\n";
    std::cout << "  l1 = " << mb.l1 << ", l2 = " << mb.l2 << '\n';
    check(mb.g1.f1 == poly_ae({5, -1, 2}) && mb.g1.f2 == LinPoly::identity(F),
          "g1 = [a^2*x^4 + a^5*x, x]");
    check(mb.g2.f1 == poly_ae({0, 6}) && mb.g2.f2 == LinPoly::monomial(F, 1, F->alpha_pow(3)),
          "g2 = [a^6*x^2 + x, a^3*x^2]");
    check(mb.l1 == 2 && mb.l2 == 2, "l1 = l2 = 2");

    std::cout << "candidate sweep at j = 0: a = a0*x for a0 in F_8, b = x\n";
    int accepted = 0;
    for (std::uint64_t ai = 0; ai < 8; ++ai) {
        const LinPoly a(F, {F->from_index(ai)});
        const LinPoly b = LinPoly::identity(F);
        const ModuleElement f{a.compose(mb.g1.f1) + b.compose(mb.g2.f1),
                              a.compose(mb.g1.f2) + b.compose(mb.g2.f2)};
        const auto msg = check_candidate(f, code.k());
        std::cout << "  a0 = " << F->to_string(F->from_index(ai)) << ": "
                  << (msg ? "message " + msg->to_string() : std::string("rejected")) << '\n';
        if (msg) ++accepted;
    }
    check(accepted == 7, "divisibility holds exactly for the 7 nonzero a0");

    const DecodeResult res = list_decode(code, r);
    const OracleResult orc = oracle_closest(code, r);
    std::cout << "list decoding result (distance " << res.distance << "):\n";
    for (const auto& e : res.entries)
        std::cout << "  message " << e.message.to_string() << "  codeword "
                  << word_str(*F, e.codeword) << '\n';
    check(res.distance == 1, "all closest codewords lie at rank distance 1");
    check(res.entries.size() == 7 && orc.closest.size() == 7,
          "decoder and 64-codeword oracle both find 7 closest codewords");
    bool sets_match = res.entries.size() == orc.closest.size();
    for (std::size_t i = 0; sets_match && i < res.entries.size(); ++i)
        sets_match = res.entries[i].message == orc.closest[i].message &&
                     res.entries[i].codeword == orc.closest[i].codeword;
    check(sets_match, "decoded set equals the oracle set");
    bool has_m6 = false;
    for (const auto& e : res.entries)
        if (e.message == poly_ae({0, 1}) && e.codeword == Word{F->alpha_pow(3), F->one(), F->alpha_pow(3)})
            has_m6 = true;
    check(has_m6, "includes message a*x^2 + x with codeword (a^3, 1, a^3)");

    if (failures) {
        std::cout << failures << " fixture check(s) failed\n";
        return kExitDecodeFailure;
    }
    std::cout << "all fixture checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabidulin rank-metric codes: encoding and minimal list decoding"};
    app.require_subcommand(1);

    // codegen
    auto* codegen = app.add_subcommand("codegen", "Generate a code file");
    Digit q = 2;
    int m = 3, n = 3, k = 2;
    std::string modulus_csv, g_json, out_path;
    codegen->add_option("--q", q, "Base field characteristic (prime)")->required();
    codegen->add_option("--m", m, "Extension degree")->required();
    codegen->add_option("--n", n, "Code length (n <= m)")->required();
    codegen->add_option("--k", k, "Code dimension")->required();
    codegen->add_option("--modulus", modulus_csv,
                        "Modulus digits low-to-high, e.g. 1,1,0,1 (default: canonical)");
    codegen->add_option("--g", g_json, "Evaluation points as JSON (default: 1,a,...,a^(n-1))");
    codegen->add_option("--out", out_path, "Output file (default: stdout)");

    // encode
    auto* encode = app.add_subcommand("encode", "Encode a message");
    std::string code_path, msg_json, in_path;
    encode->add_option("--code", code_path, "Code file")->required();
    encode->add_option("--msg", msg_json, "Message coefficients as JSON, e.g. [[1,0,0],[0,1,0]]");
    encode->add_option("--in", in_path, "Message file ({\"elements\": [...]})");
    encode->add_option("--out", out_path, "Output word file (default: stdout)");

    // corrupt
    auto* corrupt = app.add_subcommand("corrupt", "Add a random error of prescribed rank");
    int rank = 1;
    std::uint64_t seed = 0;
    corrupt->add_option("--code", code_path, "Code file")->required();
    corrupt->add_option("--in", in_path, "Input word file")->required();
    corrupt->add_option("--rank", rank, "Error rank t")->required();
    corrupt->add_option("--seed", seed, "RNG seed");
    corrupt->add_option("--out", out_path, "Output word file (default: stdout)");

    // decode
    auto* decode = app.add_subcommand("decode", "List-decode a received word");
    std::string format = "human";
    std::uint64_t budget = kDefaultCandidateBudget;
    bool unique = false;
    decode->add_option("--code", code_path, "Code file")->required();
    decode->add_option("--in", in_path, "Received word file")->required();
    decode->add_option("--out", out_path, "Result file (canonical JSON)");
    decode->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json"}));
    decode->add_option("--budget", budget, "Candidate sweep budget");
    decode->add_flag("--unique", unique, "Fail unless a unique closest codeword exists");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force reference decoder");
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    bool histogram = false;
    oracle->add_option("--code", code_path, "Code file")->required();
    oracle->add_option("--in", in_path, "Received word file")->required();
    oracle->add_option("--out", out_path, "Result file (canonical JSON)");
    oracle->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json"}));
    oracle->add_option("--budget", oracle_budget, "Message enumeration budget");
    oracle->add_flag("--histogram", histogram, "Include the full distance histogram");

    auto* demo = app.add_subcommand("demo-example15", "Replay the worked decoding example");
    auto* selftest = app.add_subcommand("selftest", "Run the property self-test battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (codegen->parsed()) return cmd_codegen(q, m, n, k, modulus_csv, g_json, out_path);
        if (encode->parsed()) return cmd_encode(code_path, msg_json, in_path, out_path);
        if (corrupt->parsed()) return cmd_corrupt(code_path, in_path, rank, seed, out_path);
        if (decode->parsed())
            return cmd_decode(code_path, in_path, out_path, format, budget, unique);
        if (oracle->parsed())
            return cmd_oracle(code_path, in_path, out_path, format, oracle_budget, histogram);
        if (demo->parsed()) return cmd_demo();
        if (selftest->parsed()) return selftest::run_all(std::cout) ? 0 : kExitDecodeFailure;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}
