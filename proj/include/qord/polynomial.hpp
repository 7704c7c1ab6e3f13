#pragma once

// Exact polynomials in X_1..X_k (finite exponent -> rational maps).
// These carry coordinate-change data and differential-form components;
// they are never truncated.

#include <map>
#include <vector>

#include "qord/exponent.hpp"
#include "qord/rational.hpp"

namespace qord {

class Polynomial {
public:
    using TermMap = std::map<Exponent, Rat, GradedLexLess>;

    explicit Polynomial(int vars) : vars_(vars) {}

    static Polynomial monomial(int vars, const Exponent& exp, const Rat& coeff);
    static Polynomial constant(int vars, const Rat& value);

    int vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Exponent& e) const;
    long long degree() const;  // -1 for the zero polynomial
    long long max_degree_in_var(int v) const;

    void add_term(const Exponent& exp, const Rat& value);

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    Polynomial operator-() const;
    Polynomial scaled(const Rat& factor) const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& other) const = default;

private:
    int vars_ = 0;
    TermMap terms_;
};

}  // namespace qord
