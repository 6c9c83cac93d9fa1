// Brute-force reference decoder: enumerates all q^(mk) messages and keeps
// exact distances. Ground truth for every decoding claim; deliberately
// shares nothing with the list decoder beyond the field and encode layers.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gabidulin/code.hpp"
#include "gabidulin/decoder.hpp"

namespace gabidulin {

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 20;

struct OracleEntry {
    LinPoly message;
    Word codeword;
    int distance = 0;
};

struct OracleResult {
    int min_distance = 0;
    std::vector<DecodeEntry> closest;                // canonically sorted
    std::map<int, std::uint64_t> histogram;          // distance -> count
};

// Exhaustive encode-and-compare; throws too_large when q^(mk) > budget.
OracleResult oracle_closest(const Code& code, const Word& r,
                            std::uint64_t budget = kDefaultOracleBudget);

// All codewords with d_R <= t, annotated with exact distances.
std::vector<OracleEntry> oracle_within(const Code& code, const Word& r, int t,
                                       std::uint64_t budget = kDefaultOracleBudget);

}  // namespace gabidulin
