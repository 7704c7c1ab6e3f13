#include "qord/reduce.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

#include "qord/errors.hpp"

namespace qord {

namespace {

std::string exp_to_string(const Exponent& e) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < e.dim(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

}  // namespace

Exponent ceiling_vector(const Exponent& lambda1, long long n) {
    Exponent alpha = lambda1;
    for (int i = 0; i < alpha.dim(); ++i) alpha[i] = (alpha[i] + n - 1) / n;
    return alpha;
}

CoordinateChange CoordinateChange::identity(int r, const Exponent& lambda1, long long n) {
    CoordinateChange c;
    c.a.assign(r + 1, Rat(1));
    c.p.assign(r + 1, Polynomial(r + 1));
    c.alpha = ceiling_vector(lambda1, n);
    return c;
}

bool CoordinateChange::is_identity() const {
    return is_homothety() && std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 1; });
}

bool CoordinateChange::is_homothety() const {
    return std::all_of(p.begin(), p.end(), [](const Polynomial& q) { return q.is_zero(); });
}

std::vector<std::string> admissibility_issues(const CoordinateChange& c, int r, long long n,
                                              const Exponent& lambda1) {
    std::vector<std::string> issues;
    if (static_cast<int>(c.a.size()) != r + 1 || static_cast<int>(c.p.size()) != r + 1) {
        issues.push_back("change must carry r+1 linear coefficients and r+1 polynomials");
        return issues;
    }
    for (int i = 0; i <= r; ++i)
        if (c.a[i] == 0) issues.push_back("linear coefficient " + std::to_string(i + 1) + " is zero");
    const Exponent alpha = ceiling_vector(lambda1, n);
    if (c.alpha != alpha) issues.push_back("ceiling vector does not match the class data");

    for (int i = 0; i < r; ++i) {
        if (c.p[i].vars() != r + 1) {
            issues.push_back("perturbation polynomials must have r+1 variables");
            return issues;
        }
        for (const auto& [e, coeff] : c.p[i].terms()) {
            const bool has_xi = e[i] >= 1;
            const bool has_last = e[r] >= 1;
            const bool eps_shape = has_xi && e.total() >= 2;
            const bool ok = (lambda1[i] >= n) ? (has_last || eps_shape) : eps_shape;
            if (!ok)
                issues.push_back("term " + exp_to_string(e) + " of P_" + std::to_string(i + 1) +
                                 " violates the admissible shape");
        }
    }
    if (c.p[r].vars() != r + 1) {
        issues.push_back("perturbation polynomials must have r+1 variables");
        return issues;
    }
    for (const auto& [e, coeff] : c.p[r].terms()) {
        bool alpha_divides = true;
        for (int j = 0; j < r; ++j)
            if (e[j] < alpha[j]) alpha_divides = false;
        const bool eps_shape = e[r] >= 1 && e.total() >= 2;
        if (!alpha_divides && !eps_shape)
            issues.push_back("term " + exp_to_string(e) + " of P_" + std::to_string(r + 1) +
                             " violates the admissible shape");
    }
    return issues;
}

namespace {

// sigma ∘ H ∘ rho^{-1} without revalidation; used both by apply_change and
// by the scalar-probe evaluations inside the elimination loops.
FracSeries apply_change_series(const Parameterization& p, const CoordinateChange& c,
                               bool verify_components) {
    const int r = p.r();
    const long long n = p.n();
    const FracSeries& s = p.series();

    // homothety fast path: rho_i = c_i t_i, S_2 = a_{r+1} S(t_1/c_1, ...)
    if (c.is_homothety()) {
        std::vector<Rat> roots;
        for (int i = 0; i < r; ++i) {
            auto root = exact_root(c.a[i], n);
            if (!root)
                throw FieldError("homothety coefficient " + rational_to_string(c.a[i]) +
                                 " has no rational root of index " + std::to_string(n));
            roots.push_back(*root);
        }
        FracSeries out(r, s.valid_degree());
        for (const auto& [e, coeff] : s.terms()) {
            Rat v = coeff * c.a[r];
            for (int i = 0; i < r; ++i) v *= rat_pow(roots[i], -e[i]);
            out.add_term(e, v);
        }
        return out;
    }

    // sigma_{r+1}-only changes leave rho = identity
    bool base_fixed = true;
    for (int i = 0; i < r; ++i)
        if (c.a[i] != 1 || !c.p[i].is_zero()) base_fixed = false;
    if (base_fixed) {
        FracSeries out = s.scaled(c.a[r]);
        out += h_star(p, c.p[r]);
        return out;
    }

    std::vector<FracSeries> rho;
    std::vector<FracSeries> sigma_h;  // sigma_i ∘ H = a_i t_i^n + H*(P_i)
    for (int i = 0; i < r; ++i) {
        if (!exact_root(c.a[i], n))
            throw FieldError("coefficient " + rational_to_string(c.a[i]) +
                             " has no rational root of index " + std::to_string(n));
        const FracSeries hp = h_star(p, c.p[i]);
        auto quotient = hp.divided_by_monomial(n * Exponent::unit(r, i));
        if (!quotient)
            throw AdmissibilityError("H*(P_" + std::to_string(i + 1) + ") is not divisible by t_" +
                                     std::to_string(i + 1) + "^n");
        FracSeries q = *quotient;
        q.add_term(Exponent::zero(r), c.a[i]);
        rho.push_back(rational_power(q, 1, n).shifted(Exponent::unit(r, i), Rat(1)));
        FracSeries comp = hp;
        comp.add_term(n * Exponent::unit(r, i), c.a[i]);
        sigma_h.push_back(comp);
    }

    const std::vector<FracSeries> inverse = invert_diagonal(rho);

    if (verify_components) {
        for (int i = 0; i < r; ++i) {
            const FracSeries lhs = substitute_diagonal(sigma_h[i], inverse);
            const FracSeries tin =
                FracSeries::monomial(r, n * Exponent::unit(r, i), Rat(1), lhs.valid_degree());
            if (!lhs.agrees_with(tin, lhs.valid_degree()))
                throw InternalConsistencyError("component " + std::to_string(i + 1) +
                                               " of the changed parameterization is not t_i^n");
        }
    }

    FracSeries target = s.scaled(c.a[r]);
    target += h_star(p, c.p[r]);
    return substitute_diagonal(target, inverse);
}

}  // namespace

Parameterization apply_change(const Parameterization& p, const CoordinateChange& c) {
    const auto issues = admissibility_issues(c, p.r(), p.n(), p.lambda1());
    if (!issues.empty()) {
        std::string all;
        for (const auto& i : issues) all += (all.empty() ? "" : "; ") + i;
        throw AdmissibilityError(all);
    }
    if (c.is_identity()) return p;

    FracSeries s2 = apply_change_series(p, c, /*verify_components=*/true);
    Parameterization out = make_parameterization(p.r(), p.n(), s2);
    if (out.semigroup().lambdas() != p.semigroup().lambdas())
        throw InternalConsistencyError("coordinate change altered the characteristic exponents");
    return out;
}

namespace {

// Exact affine solve for the elimination scalar: the coefficient at
// gamma is affine-linear in c (every extra power of c carries an extra
// positive-degree factor), so two probes determine it.
Parameterization solve_and_apply(const Parameterization& p, const Exponent& gamma,
                                 const std::function<CoordinateChange(const Rat&)>& builder,
                                 CoordinateChange& used) {
    const Rat base = p.series().coeff(gamma);
    const auto issues = admissibility_issues(builder(Rat(1)), p.r(), p.n(), p.lambda1());
    if (!issues.empty())
        throw InternalConsistencyError("elimination built an inadmissible change: " + issues[0]);

    const FracSeries probe = apply_change_series(p, builder(Rat(1)), false);
    const Rat slope = probe.coeff(gamma) - base;
    if (slope == 0)
        throw InternalConsistencyError("elimination change has no effect at the target exponent");

    Rat scalar = -base / slope;
    Rat residual = apply_change_series(p, builder(scalar), false).coeff(gamma);
    const long long max_iter = p.trunc();
    for (long long iter = 0; residual != 0; ++iter) {
        if (iter >= max_iter)
            throw InternalConsistencyError("elimination scalar loop failed to converge");
        scalar -= residual / slope;
        const Rat next = apply_change_series(p, builder(scalar), false).coeff(gamma);
        if (next == residual)
            throw InternalConsistencyError("elimination scalar loop stalled");
        residual = next;
    }

    used = builder(scalar);
    Parameterization out = apply_change(p, used);

    // no graded-lex smaller coefficient may move
    for (const auto& [e, coeff] : p.series().terms()) {
        if (!graded_lex_lt(e, gamma)) continue;
        if (out.series().coeff(e) != coeff)
            throw InternalConsistencyError("elimination disturbed the coefficient at " +
                                           exp_to_string(e));
    }
    for (const auto& [e, coeff] : out.series().terms()) {
        if (!graded_lex_lt(e, gamma)) continue;
        if (p.series().coeff(e) != coeff)
            throw InternalConsistencyError("elimination introduced a term at " + exp_to_string(e));
    }
    if (out.series().coeff(gamma) != 0)
        throw InternalConsistencyError("elimination left a nonzero coefficient at the target");
    return out;
}

Polynomial semigroup_monomial(const SemigroupData& sg, const std::vector<long long>& rep) {
    const int r = sg.r();
    std::vector<long long> e(r + 1, 0);
    for (int i = 0; i < r; ++i) e[i] = rep[i];
    e[r] = rep[r];  // level-1 representation: one semigroup coordinate
    return Polynomial::monomial(r + 1, Exponent(std::move(e)), Rat(1));
}

}  // namespace

EliminationStep eliminate_term(const Parameterization& p, const Exponent& gamma) {
    const SemigroupData& sg = p.semigroup();
    const int r = p.r();
    const long long n = p.n();
    if (sg.g() != 1)
        throw UnsupportedError("targeted elimination is implemented for one characteristic exponent");
    if (!product_lt(p.lambda1(), gamma))
        throw NotEliminableError("target exponent does not dominate lambda_1 strictly");
    if (p.series().coeff(gamma) == 0)
        throw InputError("target exponent is not in the support");

    const Exponent& l1 = p.lambda1();
    CoordinateChange used;

    auto rep = standard_representation(sg, gamma, 1);
    const bool in_gamma = rep && std::all_of(rep->begin(), rep->end(),
                                             [](long long a) { return a >= 0; });
    if (in_gamma) {
        // sigma_{r+1} = X_{r+1} - c * X^(a_1..a_r) X_{r+1}^(a_{r+1})
        const Polynomial mono = semigroup_monomial(sg, *rep);
        auto builder = [&](const Rat& c) {
            CoordinateChange ch = CoordinateChange::identity(r, l1, n);
            ch.p[r] = mono.scaled(-c);
            return ch;
        };
        Parameterization out = solve_and_apply(p, gamma, builder, used);
        return {std::move(out), std::move(used)};
    }

    for (int i = 0; i < r; ++i) {
        if (l1[i] < n) continue;
        const Exponent delta = gamma - 2 * l1 + sg.nus()[i];
        auto drep = standard_representation(sg, delta, 1);
        if (!drep || !std::all_of(drep->begin(), drep->end(), [](long long a) { return a >= 0; }))
            continue;
        // sigma_i = X_i + c * X_{r+1} * m_delta
        Polynomial mono = semigroup_monomial(sg, *drep);
        Exponent shift = Exponent::zero(r + 1);
        shift[r] = 1;
        mono = mono * Polynomial::monomial(r + 1, shift, Rat(1));
        auto builder = [&](const Rat& c) {
            CoordinateChange ch = CoordinateChange::identity(r, l1, n);
            ch.p[i] = mono.scaled(c);
            return ch;
        };
        Parameterization out = solve_and_apply(p, gamma, builder, used);
        return {std::move(out), std::move(used)};
    }

    throw NotEliminableError("exponent " + exp_to_string(gamma) + " is not in the eliminable set");
}

EliminationStep eliminate_beyond_zariski(const Parameterization& p, const Exponent& gamma,
                                         const Exponent& delta,
                                         const std::vector<Exponent>& zariski) {
    const SemigroupData& sg = p.semigroup();
    const int r = p.r();
    const long long n = p.n();
    if (r != 2) throw UnsupportedError("form-based elimination is implemented for surfaces");
    if (sg.g() != 1)
        throw UnsupportedError("form-based elimination covers one characteristic exponent");
    if (p.series().coeff(gamma) == 0) throw InputError("target exponent is not in the support");

    const Exponent& l = p.lambda1();
    const Exponent shift = gamma - delta;
    auto rep = standard_representation(sg, shift, 1);
    if (shift.is_zero() || !rep ||
        !std::all_of(rep->begin(), rep->end(), [](long long a) { return a >= 0; }))
        throw InputError("target must be a Zariski exponent plus a nonzero semigroup element");

    // bracket(beta) = s2 (beta_2 - l_2) - s1 (beta_1 - l_1): wants 1 on the
    // delta-row and 0 on the other Zariski row
    Rat s1(0), s2(0);
    std::vector<Exponent> others;
    for (const Exponent& z : zariski)
        if (z != delta) others.push_back(z);
    if (others.empty()) {
        if (delta[1] != l[1])
            s2 = rat_of(1, delta[1] - l[1]);
        else
            s1 = rat_of(-1, delta[0] - l[0]);
    } else if (others.size() == 1) {
        const Exponent d1 = delta - l;
        const Exponent d2 = others[0] - l;
        const long long det = -d1[0] * d2[1] + d1[1] * d2[0];
        if (det == 0) throw IndependenceError("Zariski exponent shifts are linearly dependent");
        s1 = rat_of(d2[1], det);
        s2 = rat_of(d2[0], det);
    } else {
        throw UnsupportedError("form-based elimination handles at most two Zariski exponents");
    }

    const Polynomial mono = semigroup_monomial(sg, *rep);
    std::vector<Polynomial> parts;
    for (int v = 0; v < 3; ++v)
        parts.push_back(mono * Polynomial::monomial(3, Exponent::unit(3, v), Rat(1)));
    const Rat w1 = s1 / rat_of(n);
    const Rat w2 = -s2 / rat_of(n);
    const Rat w3 = (s1 * rat_of(l[0]) - s2 * rat_of(l[1])) / rat_of(n * n);
    auto builder = [&](const Rat& c) {
        CoordinateChange ch = CoordinateChange::identity(r, l, n);
        ch.p[0] = parts[0].scaled(c * w1);
        ch.p[1] = parts[1].scaled(c * w2);
        ch.p[2] = parts[2].scaled(c * w3);
        return ch;
    };
    CoordinateChange used;
    Parameterization out = solve_and_apply(p, gamma, builder, used);
    return {std::move(out), std::move(used)};
}

ReductionResult quasi_short_reduce(const Parameterization& p) {
    const NormalizationCheck norm = is_normalized(p);
    if (!norm.normalized)
        throw NormalizationRequiredError("quasi-short reduction requires a normalized input: " +
                                         norm.reasons.front());
    if (p.g() != 1)
        throw UnsupportedError("quasi-short reduction is implemented for one characteristic exponent");

    ReductionResult result{p, {}};
    std::optional<Exponent> last;
    while (true) {
        std::vector<Exponent> violations =
            quasi_short_violations(result.parameterization.semigroup(),
                                   result.parameterization.tail_support());
        if (violations.empty()) break;
        Exponent gamma = *std::min_element(violations.begin(), violations.end(), GradedLexLess{});
        if (last && !graded_lex_lt(*last, gamma))
            throw InternalConsistencyError("quasi-short reduction is not making progress");
        EliminationStep step = eliminate_term(result.parameterization, gamma);
        result.parameterization = std::move(step.parameterization);
        result.changes.push_back(std::move(step.change));
        last = std::move(gamma);
    }
    return result;
}

namespace {

// Solves c1^{e1} c2^{e2} = b over Q; e != 0.
std::optional<std::array<Rat, 2>> solve_single_power(const Exponent& e, const Rat& b) {
    const long long g = std::gcd(std::llabs(e[0]), std::llabs(e[1]));
    auto beta = exact_root(b, g);
    if (!beta) return std::nullopt;
    // Bezout coefficients for (e1/g, e2/g)
    long long u0 = e[0] / g, u1 = e[1] / g;
    long long x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    long long a0 = u0, a1 = u1;
    while (a1 != 0) {
        const long long q = a0 / a1;
        std::tie(a0, a1) = std::make_tuple(a1, a0 - q * a1);
        std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
    }
    // a0 = ±1 since gcd(u0, u1) = 1; flip to +1
    if (a0 == -1) { x0 = -x0; y0 = -y0; }
    std::array<Rat, 2> c{rat_pow(*beta, x0), rat_pow(*beta, y0)};
    if (rat_pow(c[0], e[0]) * rat_pow(c[1], e[1]) != b) return std::nullopt;
    return c;
}

std::optional<std::array<Rat, 2>> solve_power_system(const std::vector<Exponent>& shifts,
                                                     const std::vector<Rat>& values) {
    if (shifts.empty()) return std::array<Rat, 2>{Rat(1), Rat(1)};
    if (shifts.size() == 1) return solve_single_power(shifts[0], values[0]);

    const long long d = shifts[0][0] * shifts[1][1] - shifts[0][1] * shifts[1][0];
    const Rat w1 = rat_pow(values[0], shifts[1][1]) * rat_pow(values[1], -shifts[0][1]);
    const Rat w2 = rat_pow(values[0], -shifts[1][0]) * rat_pow(values[1], shifts[0][0]);
    const long long ad = std::llabs(d);
    auto r1 = exact_root(w1, ad);
    auto r2 = exact_root(w2, ad);
    if (!r1 || !r2) return std::nullopt;

    std::vector<Rat> c1s{d > 0 ? *r1 : Rat(1) / *r1};
    std::vector<Rat> c2s{d > 0 ? *r2 : Rat(1) / *r2};
    if (ad % 2 == 0) {  // even roots are two-valued
        c1s.push_back(Rat(-c1s[0]));
        c2s.push_back(Rat(-c2s[0]));
    }
    for (const Rat& c1 : c1s) {
        for (const Rat& c2 : c2s) {
            bool ok = true;
            for (std::size_t j = 0; j < shifts.size(); ++j) {
                if (rat_pow(c1, shifts[j][0]) * rat_pow(c2, shifts[j][1]) != values[j]) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::array<Rat, 2>{c1, c2};
        }
    }
    return std::nullopt;
}

}  // namespace

NormalizationOutcome normalize_coefficients(const Parameterization& p,
                                            const std::vector<Exponent>& targets) {
    const int r = p.r();
    const Exponent& l1 = p.lambda1();
    const Rat k0 = p.series().coeff(l1);
    if (k0 == 0) throw InternalConsistencyError("lambda_1 coefficient vanishes");

    std::vector<Exponent> shifts;
    std::vector<Rat> values;
    for (const Exponent& t : targets) {
        const Rat kt = p.series().coeff(t);
        if (kt == 0) throw InputError("target exponent " + exp_to_string(t) + " has zero coefficient");
        shifts.push_back(t - l1);
        values.push_back(kt / k0);
    }

    // independence of the shift set
    if (shifts.size() > static_cast<std::size_t>(r))
        throw IndependenceError("more targets than the dimension allows");
    if (shifts.size() == 1 && shifts[0].is_zero())
        throw IndependenceError("target shift is zero");
    if (shifts.size() == 2) {
        if (r != 2) throw UnsupportedError("two-target normalization is implemented for surfaces");
        const long long d = shifts[0][0] * shifts[1][1] - shifts[0][1] * shifts[1][0];
        if (d == 0) throw IndependenceError("target shifts are linearly dependent");
    }
    if (!shifts.empty() && r != 2)
        throw UnsupportedError("targeted normalization is implemented for surfaces");

    auto c = solve_power_system(shifts, values);
    if (!c) return NormalizabilityCertificate{shifts, values};

    // homothety with rho_i = c_i t_i; a_{r+1} restores a monic lambda_1 term
    CoordinateChange change = CoordinateChange::identity(r, l1, p.n());
    Rat a3(1);
    for (int i = 0; i < r; ++i) {
        change.a[i] = rat_pow((*c)[i], p.n());
        a3 *= rat_pow((*c)[i], l1[i]);
    }
    change.a[r] = a3 / k0;
    return apply_change(p, change);
}

}  // namespace qord
