#pragma once

// Generalized Zariski exponents: the ⪯-minimal non-eliminable tail
// exponents of a normalized parameterization, quasi-shortness, the
// three-exponent feasibility predicate for surfaces with one
// characteristic exponent, and the brute-force candidate search oracle.

#include <array>
#include <optional>
#include <vector>

#include "qord/branch.hpp"

namespace qord {

struct ZariskiResult {
    std::vector<Exponent> exponents;   // ⪯-antichain; empty encodes the "infinite" sentinel
    bool is_quasi_short = false;       // property of the input tail
    std::vector<Exponent> violations;  // eliminable tail exponents of the input
};

// Requires a valid, normalized parameterization. Quasi-short inputs are
// read directly; otherwise the input is reduced first when g = 1 (both
// routes agree and are cross-tested), and read directly when g >= 2.
ZariskiResult zariski_exponents(const Parameterization& p);

struct ThreeExponentWitness {
    int condition = 0;  // which inequality fired (1, 2 or 3)
    std::array<Exponent, 3> triple;
};

// Feasibility of three generalized Zariski exponents for r = 2, g = 1
// classes: true iff one of the three inequality conditions holds. The
// returned triple is verified to be ≻ lambda_1, pairwise incomparable
// and non-eliminable.
std::optional<ThreeExponentWitness> can_admit_three(const SemigroupData& sg);

// Every realizable gamma ≻ lambda_1 with total degree <= box outside the
// eliminable set: the pool any Zariski exponent set is drawn from.
std::vector<Exponent> candidate_zariski_search(const SemigroupData& sg, long long box);

}  // namespace qord
