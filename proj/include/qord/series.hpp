#pragma once

// Truncated sparse multivariate power series over exact rationals.
//
// A FracSeries stores the coefficients of every monomial of total
// degree <= valid_degree(); nothing is known beyond that bound and
// arithmetic propagates the bound honestly: products gain validity from
// the minimal degree of the other operand, monomial shifts raise it,
// derivatives lower it by one. Stored coefficients are never zero, all
// exponents are componentwise nonnegative.

#include <map>
#include <optional>
#include <vector>

#include "qord/exponent.hpp"
#include "qord/rational.hpp"

namespace qord {

// Declared total-degree bound for a computation; at least 1.
struct TruncationOrder {
    long long degree_bound;
    explicit TruncationOrder(long long d);
};

class FracSeries {
public:
    using TermMap = std::map<Exponent, Rat, GradedLexLess>;

    FracSeries(int dim, long long valid_degree);

    static FracSeries constant(int dim, const Rat& value, long long valid_degree);
    static FracSeries monomial(int dim, const Exponent& exp, const Rat& coeff,
                               long long valid_degree);

    int dim() const { return dim_; }
    long long valid_degree() const { return valid_degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Exponent& e) const;
    Rat constant_term() const { return coeff(Exponent::zero(dim_)); }

    // Least total degree of a stored term; valid_degree()+1 when no term
    // is stored (nothing below that bound, unknown beyond).
    long long min_degree() const;
    // Least total degree among stored terms with exponent >= 1 in
    // coordinate i; valid_degree()+1 when there is none.
    long long min_degree_in_var(int i) const;

    std::vector<Exponent> support() const;

    // Adds value at exp, erasing the term if the sum is zero. The
    // exponent must be componentwise nonnegative; terms above the valid
    // degree are ignored.
    void add_term(const Exponent& exp, const Rat& value);

    FracSeries truncated(long long new_valid_degree) const;

    FracSeries& operator+=(const FracSeries& other);
    FracSeries& operator-=(const FracSeries& other);
    friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
    friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
    FracSeries operator-() const;

    FracSeries scaled(const Rat& factor) const;
    FracSeries shifted(const Exponent& monomial, const Rat& factor) const;

    // Quotient by t^monomial when every stored term is divisible.
    std::optional<FracSeries> divided_by_monomial(const Exponent& monomial) const;

    // True when both series store identical terms of total degree <= bound.
    bool agrees_with(const FracSeries& other, long long bound) const;

private:
    int dim_ = 0;
    long long valid_degree_ = 0;
    TermMap terms_;
};

FracSeries mul(const FracSeries& a, const FracSeries& b);
// As mul, but never keeps terms above cap (cap <= natural valid degree).
FracSeries mul_capped(const FracSeries& a, const FracSeries& b, long long cap);
FracSeries pow(const FracSeries& base, long long k);

// Truncated binomial expansion of base^(p/q): base must be a unit
// c*(1+z); for q > 1 the constant c must admit an exact rational q-th
// root. Throws NotAUnitError / FieldError.
FracSeries rational_power(const FracSeries& base, long long p, long long q);

// s(maps[0], ..., maps[r-1]) for diagonal-type maps: every exponent of
// maps[i] has i-th coordinate >= 1 and the coefficient of t_i is
// nonzero. Throws CompositionError otherwise.
FracSeries substitute_diagonal(const FracSeries& s, const std::vector<FracSeries>& maps);

// Compositional inverse of a diagonal family map_i = t_i * unit_i; the
// round trip map_i(inverse) == t_i is verified to the propagated valid
// degree. Throws InversionError when a factor is not a unit.
std::vector<FracSeries> invert_diagonal(const std::vector<FracSeries>& maps);

FracSeries partial_derivative(const FracSeries& s, int i);

std::vector<FracSeries> identity_maps(int dim, long long valid_degree);

}  // namespace qord
