// Minimal list decoding: the interpolation module M(r) spanned by [Pi, 0]
// and [-Lambda, x], its minimal basis with respect to the (0, k-1)-weighted
// q-degree via the linearized Euclidean algorithm, and the candidate sweep
// that parametrizes all closest codewords.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gabidulin/code.hpp"
#include "gabidulin/linpoly.hpp"

namespace gabidulin {

// A pair [f1, f2], identified with Q(x, y) = f1(x) + f2(y). Elements of
// M(r) satisfy Q(g_i, r_i) = 0 for all i.
struct ModuleElement {
    LinPoly f1;
    LinPoly f2;

    bool operator==(const ModuleElement& rhs) const { return f1 == rhs.f1 && f2 == rhs.f2; }
};

struct InterpolationBasis {
    ModuleElement row1;  // [Pi, 0]
    ModuleElement row2;  // [-Lambda, x]
};

struct MinimalBasis {
    ModuleElement g1;
    ModuleElement g2;  // carries its weighted degree in the second component
    long l1 = 0;       // (0, k-1)-weighted q-degrees
    long l2 = 0;
    // Back-transform accumulated through the Euclid steps:
    // row1 = to_row1.f1 o g1 + to_row1.f2 o g2, and likewise for row2.
    ModuleElement to_row1;
    ModuleElement to_row2;
};

struct DecodeEntry {
    LinPoly message;
    Word codeword;
};

struct DecodeResult {
    int distance = 0;
    std::vector<DecodeEntry> entries;  // deduplicated, canonically sorted
};

inline constexpr std::uint64_t kDefaultCandidateBudget = std::uint64_t{1} << 24;

// True when f1(g_i) + f2(r_i) = 0 for every interpolation point.
bool vanishes_at_points(const ModuleElement& e, const Code& code, const Word& r);

// Membership test against the defining basis: [f1, f2] lies in M(r) exactly
// when f1 + f2 o Lambda is left-divisible by Pi.
bool in_module(const ModuleElement& e, const InterpolationBasis& basis);

// Pi = annihilator(g), Lambda = q_lagrange(g, r); both rows are checked to
// vanish at all (g_i, r_i) before returning.
InterpolationBasis interpolation_module(const Code& code, const Word& r);

// max(k1 + qdeg(f1), k2 + qdeg(f2)), bottom-absorbing.
std::optional<long> weighted_qdeg(const ModuleElement& e, long k1, long k2);

// Algorithm: run the linearized Euclidean algorithm on the first components,
// carrying the second components along, until the weighted-degree condition
// qdeg(t) + k - 1 >= qdeg(h) holds for the newer row.
MinimalBasis minimal_basis(const InterpolationBasis& basis, int k);

// Candidates are [N, -D]: accepted when f2 != 0, right_divide(f1, f2) is
// exact and the quotient has qdeg <= k-1; the message is the negated
// quotient. Returns nullopt on rejection.
std::optional<LinPoly> check_candidate(const ModuleElement& f, int k);

// All closest codewords to r, deepening the sweep index until candidates
// appear. The sweep at index j costs
// q^(m*(l2-l1+j+1)) * q^(m*j) divisibility checks and refuses to exceed
// the candidate budget.
DecodeResult list_decode(const Code& code, const Word& r,
                         std::uint64_t budget = kDefaultCandidateBudget);

// The codewords at rank distance exactly t from r (sweep at the single
// index j = t - l2 + k - 1; empty when j < 0).
std::vector<DecodeEntry> enumerate_distance_t(const Code& code, const Word& r, int t,
                                              std::uint64_t budget = kDefaultCandidateBudget);

class AmbiguousError : public Error {
  public:
    AmbiguousError(DecodeResult result, const std::string& what)
        : Error(errc::ambiguous, what), result_(std::move(result)) {}

    const DecodeResult& result() const { return result_; }

  private:
    DecodeResult result_;
};

// List decoding narrowed to Loidreau's setting: returns the single entry
// when the list is a singleton within the unique decoding radius, and
// throws AmbiguousError (carrying the full list) otherwise.
DecodeEntry decode_unique(const Code& code, const Word& r,
                          std::uint64_t budget = kDefaultCandidateBudget);

// Canonical order: lexicographic by message coefficient digits (padded to k).
void sort_entries(const Code& code, std::vector<DecodeEntry>& entries);

}  // namespace gabidulin
