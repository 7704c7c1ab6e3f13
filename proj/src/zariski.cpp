#include "qord/zariski.hpp"

#include <algorithm>

#include "qord/errors.hpp"
#include "qord/reduce.hpp"

namespace qord {

namespace {

std::vector<Exponent> non_eliminable_tail(const SemigroupData& sg,
                                          const std::vector<Exponent>& tail) {
    std::vector<Exponent> out;
    for (const Exponent& e : tail)
        if (!eliminable_set_member(sg, e)) out.push_back(e);
    return out;
}

}  // namespace

ZariskiResult zariski_exponents(const Parameterization& p) {
    const NormalizationCheck norm = is_normalized(p);
    if (!norm.normalized)
        throw NormalizationRequiredError("zariski exponents require a normalized input: " +
                                         norm.reasons.front());

    const SemigroupData& sg = p.semigroup();
    ZariskiResult result;
    const std::vector<Exponent> tail = p.tail_support();
    result.violations = quasi_short_violations(sg, tail);
    result.is_quasi_short = result.violations.empty();

    if (result.is_quasi_short || sg.g() >= 2) {
        result.exponents = minimal_antichain(non_eliminable_tail(sg, tail));
    } else {
        // reduce first, then read the minima of the quasi-short tail
        const ReductionResult reduced = quasi_short_reduce(p);
        result.exponents = minimal_antichain(
            non_eliminable_tail(sg, reduced.parameterization.tail_support()));
    }
    return result;
}

std::optional<ThreeExponentWitness> can_admit_three(const SemigroupData& sg) {
    if (sg.r() != 2 || sg.g() != 1)
        throw UnsupportedError("three-exponent feasibility applies to r = 2, g = 1 classes");
    const long long n = sg.n();
    if (n <= 2) return std::nullopt;  // the inequalities are unsatisfiable
    const Exponent& l = sg.lambda1();
    const long long l1 = l[0];
    const long long l2 = l[1];

    int condition = 0;
    std::array<Exponent, 3> offsets;
    if (l1 * (n - 2) >= 4 * n) {
        condition = 1;
        offsets = {Exponent({-4, 2}), Exponent({-3, 1}), Exponent({-2, 0})};
    } else if (l2 * (n - 2) >= 2 * n) {
        condition = 2;
        offsets = {Exponent({-2, 0}), Exponent({0, -2}), Exponent({-1, -1})};
    } else if (l2 * (n - 2) >= n && l1 * (n - 2) >= 3 * n) {
        condition = 3;
        offsets = {Exponent({-3, 1}), Exponent({-2, 0}), Exponent({-1, -1})};
    } else {
        return std::nullopt;
    }

    ThreeExponentWitness witness;
    witness.condition = condition;
    for (int k = 0; k < 3; ++k) witness.triple[k] = (n - 1) * l + n * offsets[k];

    std::vector<Exponent> triple(witness.triple.begin(), witness.triple.end());
    for (const Exponent& w : witness.triple) {
        if (!product_lt(l, w))
            throw InternalConsistencyError("witness exponent does not dominate lambda_1");
        if (eliminable_set_member(sg, w))
            throw InternalConsistencyError("witness exponent is eliminable");
    }
    if (!is_antichain(triple))
        throw InternalConsistencyError("witness triple is not an antichain");
    return witness;
}

std::vector<Exponent> candidate_zariski_search(const SemigroupData& sg, long long box) {
    if (sg.r() != 2) throw UnsupportedError("candidate search is implemented for surfaces");
    const Exponent& l = sg.lambda1();
    std::vector<Exponent> out;
    for (long long x = l[0]; x <= box; ++x) {
        for (long long y = l[1]; x + y <= box; ++y) {
            const Exponent gamma({x, y});
            if (gamma == l) continue;
            if (!realizable_support_exponent(sg, gamma)) continue;
            if (eliminable_set_member(sg, gamma)) continue;
            out.push_back(gamma);
        }
    }
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

}  // namespace qord
