#include "gabidulin/error.hpp"

namespace gabidulin {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::wrong_length: return "WrongLength";
        case errc::digit_out_of_range: return "DigitOutOfRange";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::singular: return "Singular";
        case errc::divisor_zero: return "DivisorZero";
        case errc::dependent_basis: return "DependentBasis";
        case errc::dependent_evaluation_points: return "DependentEvaluationPoints";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::dependent_g: return "DependentG";
        case errc::bad_params: return "BadParams";
        case errc::degree_too_high: return "DegreeTooHigh";
        case errc::rank_out_of_range: return "RankOutOfRange";
        case errc::radius_exhausted: return "RadiusExhausted";
        case errc::candidate_budget_exceeded: return "CandidateBudgetExceeded";
        case errc::ambiguous: return "Ambiguous";
        case errc::too_large: return "TooLarge";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::parse_error: return "ParseError";
        case errc::internal: return "InternalError";
    }
    return "Error";
}

}  // namespace gabidulin
