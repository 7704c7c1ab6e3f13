#pragma once

// Admissible coordinate changes compatible with the projection, their
// action on parameterizations, targeted elimination of eliminable tail
// terms, iterated reduction to quasi-short form, and coefficient
// normalization by homotheties.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qord/branch.hpp"
#include "qord/polynomial.hpp"

namespace qord {

// sigma_i = a_i X_i + P_i with P_i = X_i eps_i + X_{r+1} eta_i (eta_i = 0
// unless lambda_{1i} >= n), sigma_{r+1} = a_{r+1} X_{r+1} + P_{r+1} with
// P_{r+1} = X_{r+1} eps + X^alpha eta; alpha is the ceiling vector
// ceil(lambda_1 / n).
struct CoordinateChange {
    std::vector<Rat> a;        // r+1 nonzero linear coefficients
    std::vector<Polynomial> p; // r+1 perturbation polynomials in r+1 variables
    Exponent alpha;            // ceiling vector, length r

    static CoordinateChange identity(int r, const Exponent& lambda1, long long n);
    bool is_identity() const;
    bool is_homothety() const;  // all perturbations zero
};

Exponent ceiling_vector(const Exponent& lambda1, long long n);

// Shape violations of the change against the class data (empty = admissible).
std::vector<std::string> admissibility_issues(const CoordinateChange& c, int r, long long n,
                                              const Exponent& lambda1);

// sigma ∘ H ∘ rho^{-1} with rho_i = t_i (a_i + H*(P_i)/t_i^n)^{1/n}.
// The first r components are re-derived and verified to equal t_i^n; the
// result is re-validated. Throws AdmissibilityError / FieldError.
Parameterization apply_change(const Parameterization& p, const CoordinateChange& c);

struct EliminationStep {
    Parameterization parameterization;
    CoordinateChange change;
};

// Removes the term at gamma (eliminable, ≻ lambda_1) without touching
// any graded-lex smaller coefficient. g = 1 only.
EliminationStep eliminate_term(const Parameterization& p, const Exponent& gamma);

// Removes the term at gamma = delta + shift (delta a Zariski exponent of
// p, shift ∈ Γ \ 0) through the form-derived change whose leading effect
// isolates the delta-direction; the remaining Zariski direction, if any,
// is annihilated by an exact linear system. Surfaces with g = 1.
EliminationStep eliminate_beyond_zariski(const Parameterization& p, const Exponent& gamma,
                                         const Exponent& delta,
                                         const std::vector<Exponent>& zariski);

struct ReductionResult {
    Parameterization parameterization;
    std::vector<CoordinateChange> changes;
};

// Repeatedly eliminates the graded-lex least eliminable tail exponent
// until the tail is quasi-short within the truncation order.
ReductionResult quasi_short_reduce(const Parameterization& p);

// Emitted when the homothety scalars needed for normalization do not
// exist in Q: the independent shift set and the multiplicative equations
// c^shift = value the scalars would have to satisfy.
struct NormalizabilityCertificate {
    std::vector<Exponent> shifts;  // delta - lambda_1 per target
    std::vector<Rat> values;       // target coefficient relative to the lambda_1 coefficient
};

using NormalizationOutcome = std::variant<Parameterization, NormalizabilityCertificate>;

// Rescales by a homothety so the coefficients at lambda_1 and at each
// target become 1, when the required scalars are rational; otherwise
// returns the certificate. Shift vectors must be linearly independent.
NormalizationOutcome normalize_coefficients(const Parameterization& p,
                                            const std::vector<Exponent>& targets);

}  // namespace qord
