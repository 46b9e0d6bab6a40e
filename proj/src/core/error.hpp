#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rf {

enum class ErrCode {
    AxiomQ1,
    AxiomQ2,
    AxiomQ3,
    BadUnit,
    Parse,
    Io,
    TooLarge,
    OutOfRange,
    NotAComplex,
    NegativeRank,
    NonUnitConstantTerm,
    NotCoinvariant,
    NotACocycle,
    NotHomogeneous,
    NoConsistentSigns,
    Invalid,
};

// witness carries the offending indices where one exists (axiom scans report
// the lexicographically smallest witness; NegativeRank reports the degree).
struct Error : std::runtime_error {
    ErrCode code;
    std::vector<long> witness;

    Error(ErrCode c, const std::string& msg, std::vector<long> w = {})
        : std::runtime_error(msg), code(c), witness(std::move(w)) {}
};

}  // namespace rf
