#include "qord/branch.hpp"

#include <algorithm>
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

std::vector<Exponent> Parameterization::tail_support() const {
    std::vector<Exponent> out;
    for (const auto& [e, c] : s_.terms())
        if (e != lambda1()) out.push_back(e);
    return out;
}

ValidationResult validate(int r, long long n, const FracSeries& s) {
    ValidationResult result;
    auto reject = [&](const std::string& why) { result.violations.push_back(why); };

    if (r < 1) reject("dimension must be >= 1");
    if (n < 2) reject("multiplicity must be >= 2");
    if (s.dim() != r) reject("series dimension differs from r");
    if (!result.violations.empty()) return result;

    if (s.constant_term() != 0) reject("series must be a nonunit: S(0) = 0");

    // gcd condition on n and all support entries
    long long gcd = n;
    for (const auto& [e, c] : s.terms())
        for (int i = 0; i < r; ++i) gcd = std::gcd(gcd, e[i]);
    if (gcd > 1)
        reject("unreduced parameterization: n and the support entries share the factor " +
               std::to_string(gcd));

    // greedy characteristic-exponent extraction
    std::vector<Exponent> q0_gens;
    for (int i = 0; i < r; ++i) q0_gens.push_back(n * Exponent::unit(r, i));
    Lattice q(r, q0_gens);
    std::vector<Exponent> lambdas;
    while (true) {
        std::vector<Exponent> candidates;
        for (const auto& [e, c] : s.terms())
            if (!q.contains(e)) candidates.push_back(e);
        if (candidates.empty()) break;
        std::vector<Exponent> least = minimal_antichain(std::move(candidates));
        if (least.size() > 1) {
            std::string who;
            for (const Exponent& e : least) who += " " + exp_to_string(e);
            reject("not quasi-ordinary: incomparable minimal candidates at stage " +
                   std::to_string(lambdas.size() + 1) + ":" + who);
            break;
        }
        const Exponent lambda = least.front();
        if (!lambdas.empty() && !product_lt(lambdas.back(), lambda)) {
            reject("not quasi-ordinary: characteristic exponents do not form a chain at " +
                   exp_to_string(lambda));
            break;
        }
        lambdas.push_back(lambda);
        q = q.joined(lambda);
    }
    if (lambdas.empty() && result.violations.empty())
        reject("not quasi-ordinary: no characteristic exponent (support inside nZ^r)");
    if (!result.violations.empty()) return result;

    // every support exponent must lie in nZ^r + sum_{lambda_i ⪯ delta} lambda_i Z
    for (const auto& [e, c] : s.terms()) {
        std::vector<Exponent> gens = q0_gens;
        for (const Exponent& l : lambdas)
            if (product_le(l, e)) gens.push_back(l);
        if (!Lattice(r, gens).contains(e))
            reject("not quasi-ordinary: support exponent " + exp_to_string(e) +
                   " lies outside its allowed lattice");
    }
    if (!result.violations.empty()) return result;

    std::shared_ptr<const SemigroupData> sg;
    try {
        sg = std::make_shared<SemigroupData>(build_semigroup(r, n, lambdas));
    } catch (const SemigroupError& err) {
        reject(err.what());
        return result;
    }
    if (s.valid_degree() < 1) {
        reject("truncation order must be >= 1");
        return result;
    }
    result.value.emplace(r, n, s, std::move(sg));
    return result;
}

Parameterization make_parameterization(int r, long long n, const FracSeries& s) {
    ValidationResult v = validate(r, n, s);
    if (!v.ok()) {
        std::string all;
        for (const auto& w : v.violations) all += (all.empty() ? "" : "; ") + w;
        throw NotQuasiOrdinaryError(all);
    }
    return *std::move(v.value);
}

NormalizationCheck is_normalized(const Parameterization& p) {
    NormalizationCheck check;
    const FracSeries& s = p.series();
    const Exponent& l1 = p.lambda1();

    std::vector<Exponent> minima = minimal_antichain(s.support());
    if (minima.size() != 1 || minima.front() != l1)
        check.reasons.push_back("minimal-term: lambda_1 is not the unique minimal support exponent");
    else if (s.coeff(l1) != 1)
        check.reasons.push_back("minimal-coefficient: coefficient at lambda_1 is " +
                                rational_to_string(s.coeff(l1)) + ", expected 1");

    const auto& lambdas = p.semigroup().lambdas();
    for (int i = 0; i + 1 < p.r(); ++i) {
        int cmp = 0;  // lexicographic compare of columns i and i+1
        for (const Exponent& l : lambdas) {
            if (l[i] != l[i + 1]) {
                cmp = l[i] < l[i + 1] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0) {
            check.reasons.push_back("column-order: exponent column " + std::to_string(i + 1) +
                                    " is lexicographically below column " + std::to_string(i + 2));
            break;
        }
    }

    bool single_axis = l1[0] > 0;
    for (int i = 1; i < p.r(); ++i)
        if (l1[i] != 0) single_axis = false;
    if (single_axis && l1[0] <= p.n())
        check.reasons.push_back("axis-condition: lambda_1 on the first axis requires lambda_11 > n");

    check.normalized = check.reasons.empty();
    return check;
}

FracSeries h_star(const Parameterization& p, const Polynomial& poly) {
    if (poly.vars() != p.r() + 1) throw DimensionError("polynomial must have r+1 variables");
    const int r = p.r();
    const FracSeries& s = p.series();
    const long long big = s.valid_degree() + std::max<long long>(poly.degree(), 0) *
                                                 (p.n() + s.valid_degree());

    // slice by the X_{r+1}-degree and run a Horner scheme in S
    const long long dmax = poly.max_degree_in_var(r);
    std::vector<FracSeries> slices(dmax + 1, FracSeries(r, big));
    for (const auto& [e, c] : poly.terms()) {
        std::vector<long long> base(r);
        for (int i = 0; i < r; ++i) base[i] = p.n() * e[i];
        slices[e[r]].add_term(Exponent(std::move(base)), c);
    }
    FracSeries acc = slices[dmax];
    for (long long k = dmax - 1; k >= 0; --k) {
        acc = mul(acc, s);
        acc += slices[k];
    }
    return acc;
}

namespace {

FracSeries jacobian(const FracSeries& f, const FracSeries& g) {
    return mul(partial_derivative(f, 0), partial_derivative(g, 1)) -
           mul(partial_derivative(f, 1), partial_derivative(g, 0));
}

}  // namespace

FracSeries psi(const Parameterization& p, const RForm& form) {
    if (p.r() != 2) throw UnsupportedError("psi is implemented for surfaces (r = 2) only");
    if (form.components.size() != 3) throw DimensionError("a 2-form needs 3 components");

    const long long n = p.n();
    const FracSeries& s = p.series();
    const long long exact = s.valid_degree() + 4 * (n + s.valid_degree());
    const FracSeries a = FracSeries::monomial(2, Exponent({n, 0}), Rat(1), exact);
    const FracSeries b = FracSeries::monomial(2, Exponent({0, n}), Rat(1), exact);

    const FracSeries j1 = jacobian(b, s);
    const FracSeries j2 = jacobian(a, s);
    const FracSeries j3 = jacobian(a, b);

    FracSeries sum = mul(h_star(p, form.components[0]), j1);
    sum += mul(h_star(p, form.components[1]), j2);
    sum += mul(h_star(p, form.components[2]), j3);
    return sum.shifted(Exponent({1, 1}), Rat(1));
}

std::optional<Exponent> dominant_exponent(const FracSeries& s) {
    if (s.is_zero()) return std::nullopt;
    std::vector<Exponent> minima = minimal_antichain(s.support());
    if (minima.size() != 1) return std::nullopt;
    return minima.front();
}

}  // namespace qord
