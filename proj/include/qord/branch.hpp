#pragma once

// Quasi-ordinary parameterizations H = (t_1^n, ..., t_r^n, S(t)):
// the Lipman validity criterion, characteristic-exponent extraction,
// normalized-form checks, the substitution homomorphism H*, and the
// differential-form map psi for surfaces (r = 2).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qord/polynomial.hpp"
#include "qord/semigroup.hpp"
#include "qord/series.hpp"

namespace qord {

class Parameterization {
public:
    Parameterization(int r, long long n, FracSeries s,
                     std::shared_ptr<const SemigroupData> semigroup)
        : r_(r), n_(n), s_(std::move(s)), semigroup_(std::move(semigroup)) {}

    int r() const { return r_; }
    long long n() const { return n_; }
    const FracSeries& series() const { return s_; }
    const SemigroupData& semigroup() const { return *semigroup_; }
    std::shared_ptr<const SemigroupData> semigroup_ptr() const { return semigroup_; }
    long long trunc() const { return s_.valid_degree(); }
    const Exponent& lambda1() const { return semigroup_->lambda1(); }
    int g() const { return semigroup_->g(); }

    // Support exponents of S other than lambda_1.
    std::vector<Exponent> tail_support() const;

private:
    int r_;
    long long n_;
    FracSeries s_;
    std::shared_ptr<const SemigroupData> semigroup_;
};

struct ValidationResult {
    std::optional<Parameterization> value;
    std::vector<std::string> violations;  // empty iff value is set
    bool ok() const { return value.has_value(); }
};

// Checks the Lipman criterion on supp(S), extracts the characteristic
// exponents greedily and builds the cached semigroup. All violated
// conditions are reported.
ValidationResult validate(int r, long long n, const FracSeries& s);

// validate() that throws NotQuasiOrdinaryError on rejection.
Parameterization make_parameterization(int r, long long n, const FracSeries& s);

struct NormalizationCheck {
    bool normalized = false;
    std::vector<std::string> reasons;  // codes for each violated condition
};

// The three normalized-parameterization conditions: monic unique minimal
// term at lambda_1, lexicographically ordered exponent columns, and the
// axis condition (single-axis lambda_1 needs lambda_11 > n).
NormalizationCheck is_normalized(const Parameterization& p);

// A differential r-form sum h_i dX_1 ∧ ... ∧ (dX_i omitted) ∧ ... ∧ dX_{r+1},
// stored through its r+1 polynomial components.
struct RForm {
    std::vector<Polynomial> components;
};

// h(t_1^n, ..., t_r^n, S(t)) truncated to the propagated valid degree.
FracSeries h_star(const Parameterization& p, const Polynomial& poly);

// The series-valued pairing of a 2-form against the parameterization:
// t_1 t_2 * sum_i H*(h_i) * (wedge of the other two dH*(X_j), in
// increasing j order, divided by dt_1 ∧ dt_2). Surfaces only.
FracSeries psi(const Parameterization& p, const RForm& form);

// The unique ⪯-minimum of supp(s) when the Newton polyhedron has a
// single vertex; nullopt for zero series or several minimal vertices.
std::optional<Exponent> dominant_exponent(const FracSeries& s);

}  // namespace qord
