#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qord/branch.hpp"
#include "qord/errors.hpp"
#include "support/gens.hpp"

using namespace qord;

namespace {

FracSeries make_series(long long trunc,
                       std::initializer_list<std::pair<Exponent, Rat>> terms) {
    FracSeries s(2, trunc);
    for (const auto& [e, c] : terms) s.add_term(e, c);
    return s;
}

Parameterization example_hc(const Rat& c, long long trunc = 40) {
    return make_parameterization(
        2, 5,
        make_series(trunc, {{Exponent({5, 1}), Rat(1)},
                            {Exponent({5, 8}), Rat(1)},
                            {Exponent({5, 9}), c},
                            {Exponent({10, 4}), Rat(1)}}));
}

// The 2-form whose pairing with the surface has no term over lambda_1:
// components (s1/n) X_1, (s2/n) X_2, ((s1 l1 - s2 l2)/n^2) X_3.
RForm probe_form(const Rat& s1, const Rat& s2, long long n, const Exponent& lambda) {
    RForm form;
    form.components.push_back(
        Polynomial::monomial(3, Exponent({1, 0, 0}), s1 / rat_of(n)));
    form.components.push_back(
        Polynomial::monomial(3, Exponent({0, 1, 0}), s2 / rat_of(n)));
    form.components.push_back(Polynomial::monomial(
        3, Exponent({0, 0, 1}),
        (s1 * rat_of(lambda[0]) - s2 * rat_of(lambda[1])) / rat_of(n * n)));
    return form;
}

}  // namespace

TEST_CASE("validation accepts the degree-5 example") {
    Parameterization p = example_hc(Rat(7, 3));
    CHECK(p.g() == 1);
    CHECK(p.lambda1() == Exponent({5, 1}));
    CHECK(p.semigroup().indices() == std::vector<long long>{5});
    CHECK(is_normalized(p).normalized);
}

TEST_CASE("validation accepts the diagonal surface") {
    Parameterization p =
        make_parameterization(2, 3, make_series(12, {{Exponent({1, 1}), Rat(1)}}));
    CHECK(p.g() == 1);
    CHECK(p.lambda1() == Exponent({1, 1}));
}

TEST_CASE("incomparable minimal candidates are rejected") {
    ValidationResult v = validate(
        2, 4, make_series(12, {{Exponent({3, 0}), Rat(1)}, {Exponent({0, 2}), Rat(1)}}));
    CHECK_FALSE(v.ok());
    REQUIRE_FALSE(v.violations.empty());
    CHECK(v.violations.front().find("incomparable") != std::string::npos);
}

TEST_CASE("common divisor of n and the support is rejected") {
    ValidationResult v = validate(2, 4, make_series(12, {{Exponent({2, 2}), Rat(1)}}));
    CHECK_FALSE(v.ok());
    bool mentions = false;
    for (const auto& w : v.violations) mentions = mentions || w.find("unreduced") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("support exponent outside its lattice is rejected") {
    // (6,2) is not in 5Z^2 + (5,1)Z
    ValidationResult v = validate(
        2, 5, make_series(20, {{Exponent({5, 1}), Rat(1)}, {Exponent({6, 2}), Rat(1)}}));
    CHECK_FALSE(v.ok());
}

TEST_CASE("normalization reason codes") {
    SUBCASE("column order") {
        Parameterization p =
            make_parameterization(2, 3, make_series(10, {{Exponent({0, 2}), Rat(1)}}));
        NormalizationCheck c = is_normalized(p);
        CHECK_FALSE(c.normalized);
        CHECK(c.reasons.front().find("column-order") != std::string::npos);
    }
    SUBCASE("axis condition") {
        Parameterization p =
            make_parameterization(2, 3, make_series(10, {{Exponent({2, 0}), Rat(1)}}));
        NormalizationCheck c = is_normalized(p);
        CHECK_FALSE(c.normalized);
        CHECK(c.reasons.front().find("axis-condition") != std::string::npos);
    }
    SUBCASE("minimal coefficient must be one") {
        Parameterization p =
            make_parameterization(2, 5, make_series(20, {{Exponent({5, 1}), Rat(2)}}));
        NormalizationCheck c = is_normalized(p);
        CHECK_FALSE(c.normalized);
        CHECK(c.reasons.front().find("coefficient") != std::string::npos);
    }
}

TEST_CASE("substitution homomorphism") {
    Parameterization p = example_hc(Rat(7, 3));
    SUBCASE("first coordinate") {
        FracSeries r = h_star(p, Polynomial::monomial(3, Exponent({1, 0, 0}), Rat(1)));
        CHECK(r.coeff(Exponent({5, 0})) == 1);
        CHECK(r.terms().size() == 1);
    }
    SUBCASE("last coordinate gives the series back") {
        FracSeries r = h_star(p, Polynomial::monomial(3, Exponent({0, 0, 1}), Rat(1)));
        CHECK(r.agrees_with(p.series(), p.trunc()));
    }
    SUBCASE("mixed monomial shifts the series") {
        FracSeries r = h_star(p, Polynomial::monomial(3, Exponent({1, 0, 1}), Rat(1)));
        CHECK(r.coeff(Exponent({10, 1})) == 1);
        CHECK(r.coeff(Exponent({10, 8})) == 1);
        CHECK(r.coeff(Exponent({10, 9})) == Rat(7, 3));
        CHECK(r.coeff(Exponent({15, 4})) == 1);
    }
    SUBCASE("ring homomorphism on random polynomials") {
        testgen::Rng rng(61);
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial f(3), g(3);
            for (int k = 0; k < 3; ++k) {
                f.add_term(testgen::random_poly_exponent(rng, 3, 3), testgen::random_rational(rng));
                g.add_term(testgen::random_poly_exponent(rng, 3, 3), testgen::random_rational(rng));
            }
            FracSeries lhs = h_star(p, f * g);
            FracSeries rhs = mul(h_star(p, f), h_star(p, g));
            CHECK(lhs.agrees_with(rhs, std::min(lhs.valid_degree(), rhs.valid_degree())));
        }
    }
}

TEST_CASE("form pairing") {
    Parameterization p = example_hc(Rat(0), 30);
    const long long n = 5;
    SUBCASE("volume form gives n^2 t^(n,n)") {
        RForm form;
        form.components.assign(3, Polynomial(3));
        form.components[2] = Polynomial::constant(3, Rat(1));
        FracSeries r = psi(p, form);
        CHECK(r.coeff(Exponent({n, n})) == n * n);
        CHECK(r.terms().size() == 1);
    }
    SUBCASE("polynomial multiples of the volume form") {
        testgen::Rng rng(67);
        for (int trial = 0; trial < 10; ++trial) {
            Polynomial p3(3);
            for (int k = 0; k < 3; ++k)
                p3.add_term(testgen::random_poly_exponent(rng, 3, 2), testgen::random_rational(rng));
            RForm form;
            form.components.assign(3, Polynomial(3));
            form.components[2] = p3;
            FracSeries lhs = psi(p, form);
            FracSeries rhs = h_star(p, p3).shifted(Exponent({n, n}), rat_of(n * n));
            CHECK(lhs.agrees_with(rhs, std::min(lhs.valid_degree(), rhs.valid_degree())));
        }
    }
    SUBCASE("pairing is linear over the substitution homomorphism") {
        testgen::Rng rng(71);
        for (int trial = 0; trial < 8; ++trial) {
            Polynomial h(3);
            for (int k = 0; k < 2; ++k)
                h.add_term(testgen::random_poly_exponent(rng, 3, 2), testgen::random_rational(rng));
            RForm base;
            base.components.assign(3, Polynomial(3));
            for (int k = 0; k < 3; ++k)
                base.components[k].add_term(testgen::random_poly_exponent(rng, 3, 2),
                                            testgen::random_rational(rng));
            RForm scaled;
            for (const auto& comp : base.components) scaled.components.push_back(h * comp);
            FracSeries lhs = psi(p, scaled);
            FracSeries rhs = mul(h_star(p, h), psi(p, base));
            CHECK(lhs.agrees_with(rhs, std::min(lhs.valid_degree(), rhs.valid_degree())));
        }
    }
}

TEST_CASE("probe form isolates tail coefficients") {
    // H = (t^n, t^n, t^lambda + a t^delta u): the pairing coefficient at
    // delta + (n,n) is (s2 (d2-l2) - s1 (d1-l1)) a, exactly.
    testgen::Rng rng(73);
    const std::vector<std::tuple<long long, Exponent, Exponent>> cases{
        {5, Exponent({5, 1}), Exponent({5, 8})},
        {5, Exponent({5, 1}), Exponent({10, 4})},
        {3, Exponent({4, 1}), Exponent({6, 3})},
        {4, Exponent({3, 2}), Exponent({5, 6})},
        {6, Exponent({2, 1}), Exponent({4, 8})},
    };
    for (const auto& [n, lambda, delta] : cases) {
        for (int trial = 0; trial < 2; ++trial) {
            const Rat a = testgen::random_rational(rng);
            const Rat s1 = testgen::random_rational(rng, 5, 3, false);
            const Rat s2 = testgen::random_rational(rng, 5, 3, false);
            const SemigroupData sg = build_semigroup(2, n, {lambda});

            FracSeries s(2, 40);
            s.add_term(lambda, Rat(1));
            s.add_term(delta, a);
            // a short random unit tail on the delta term
            for (int k = 0; k < 2; ++k) {
                auto off = testgen::random_lattice_offset(rng, sg, 6);
                if (off && s.coeff(delta + *off) == 0)
                    s.add_term(delta + *off, a * testgen::random_rational(rng));
            }
            Parameterization p = make_parameterization(2, n, s);
            FracSeries value = psi(p, probe_form(s1, s2, n, lambda));
            const Rat expected =
                (s2 * rat_of(delta[1] - lambda[1]) - s1 * rat_of(delta[0] - lambda[0])) * a;
            CHECK(value.coeff(delta + Exponent({n, n})) == expected);
            // and nothing appears over lambda_1
            CHECK(value.coeff(lambda + Exponent({n, n})) == 0);
        }
    }
}

TEST_CASE("dominant exponent") {
    CHECK(dominant_exponent(make_series(12, {{Exponent({5, 1}), Rat(1)},
                                             {Exponent({5, 8}), Rat(1)}})) == Exponent({5, 1}));
    CHECK_FALSE(dominant_exponent(
                    make_series(12, {{Exponent({2, 0}), Rat(1)}, {Exponent({0, 3}), Rat(1)}}))
                    .has_value());
    CHECK_FALSE(dominant_exponent(FracSeries(2, 12)).has_value());
}

TEST_CASE("normalized inputs have dominant exponent lambda_1") {
    testgen::Rng rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        Parameterization p =
            testgen::random_normalized_parameterization(rng, 4, Exponent({3, 2}), 24, 4);
        CHECK(dominant_exponent(p.series()) == p.lambda1());
    }
}
