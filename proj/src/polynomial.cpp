#include "qord/polynomial.hpp"

#include <algorithm>

#include "qord/errors.hpp"

namespace qord {

Polynomial Polynomial::monomial(int vars, const Exponent& exp, const Rat& coeff) {
    Polynomial p(vars);
    p.add_term(exp, coeff);
    return p;
}

Polynomial Polynomial::constant(int vars, const Rat& value) {
    return monomial(vars, Exponent::zero(vars), value);
}

Rat Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

long long Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

long long Polynomial::max_degree_in_var(int v) const {
    long long best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[v]);
    return best;
}

void Polynomial::add_term(const Exponent& exp, const Rat& value) {
    if (exp.dim() != vars_) throw DimensionError("term dimension differs from variable count");
    if (!exp.nonnegative()) throw DimensionError("polynomial exponents must be nonnegative");
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (vars_ != other.vars_) throw DimensionError("variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(-c));
    return out;
}

Polynomial Polynomial::scaled(const Rat& factor) const {
    Polynomial out(vars_);
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(c * factor));
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars()) throw DimensionError("variable counts differ");
    Polynomial out(a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, Rat(ca * cb));
    return out;
}

}  // namespace qord
