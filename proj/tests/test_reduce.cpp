#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qord/errors.hpp"
#include "qord/reduce.hpp"
#include "qord/zariski.hpp"
#include "support/gens.hpp"

using namespace qord;

namespace {

FracSeries make_series(long long trunc,
                       std::initializer_list<std::pair<Exponent, Rat>> terms) {
    FracSeries s(2, trunc);
    for (const auto& [e, c] : terms) s.add_term(e, c);
    return s;
}

}  // namespace

TEST_CASE("identity change returns the input") {
    Parameterization p = make_parameterization(
        2, 5, make_series(30, {{Exponent({5, 1}), Rat(1)}, {Exponent({5, 8}), Rat(1)}}));
    CoordinateChange id = CoordinateChange::identity(2, p.lambda1(), p.n());
    Parameterization q = apply_change(p, id);
    CHECK(q.series().agrees_with(p.series(), p.trunc()));
}

TEST_CASE("homothety rescales without moving the support") {
    Parameterization p = make_parameterization(
        2, 5,
        make_series(40, {{Exponent({5, 1}), Rat(1)},
                         {Exponent({5, 8}), Rat(1)},
                         {Exponent({10, 4}), Rat(1)}}));
    CoordinateChange c = CoordinateChange::identity(2, p.lambda1(), p.n());
    c.a[0] = rat_of(32);      // 2^5
    c.a[1] = rat_of(243);     // 3^5
    c.a[2] = rat_of(32 * 3);  // keeps the lambda_1 term monic
    Parameterization q = apply_change(p, c);
    CHECK(q.series().support() == p.series().support());
    CHECK(q.series().coeff(Exponent({5, 1})) == 1);
    CHECK(q.series().coeff(Exponent({5, 8})) == rat_of(1, 2187));     // 3^-7
    CHECK(q.series().coeff(Exponent({10, 4})) == rat_of(1, 32 * 27));  // 2^-5 3^-3
}

TEST_CASE("homothety composed with its inverse is the identity") {
    testgen::Rng rng(101);
    Parameterization p =
        testgen::random_normalized_parameterization(rng, 4, Exponent({3, 2}), 24, 4);
    CoordinateChange c = CoordinateChange::identity(2, p.lambda1(), p.n());
    c.a = {rat_of(16), rat_of(81, 16), rat_of(5, 7)};  // 2^4, (3/2)^4, any
    CoordinateChange inv = CoordinateChange::identity(2, p.lambda1(), p.n());
    for (int i = 0; i < 3; ++i) inv.a[i] = Rat(1) / c.a[i];
    Parameterization q = apply_change(apply_change(p, c), inv);
    CHECK(q.series().agrees_with(p.series(), p.trunc()));
}

TEST_CASE("irrational homothety roots are refused") {
    Parameterization p =
        make_parameterization(2, 5, make_series(20, {{Exponent({5, 1}), Rat(1)}}));
    CoordinateChange c = CoordinateChange::identity(2, p.lambda1(), p.n());
    c.a[0] = rat_of(2);  // no rational fifth root
    CHECK_THROWS_AS(apply_change(p, c), FieldError);
}

TEST_CASE("shape constraints are enforced") {
    Parameterization p =
        make_parameterization(2, 5, make_series(20, {{Exponent({5, 1}), Rat(1)}}));
    CoordinateChange c = CoordinateChange::identity(2, p.lambda1(), p.n());
    // X_3-part in P_2 requires lambda_12 >= n, but lambda_12 = 1 < 5
    c.p[1] = Polynomial::monomial(3, Exponent({0, 0, 1}), Rat(1));
    CHECK_THROWS_AS(apply_change(p, c), AdmissibilityError);
}

TEST_CASE("elimination of a semigroup-member exponent") {
    Parameterization p = make_parameterization(
        2, 5, make_series(40, {{Exponent({5, 1}), Rat(1)}, {Exponent({10, 6}), Rat(1)}}));
    EliminationStep step = eliminate_term(p, Exponent({10, 6}));
    CHECK(step.parameterization.series().coeff(Exponent({10, 6})) == 0);
    CHECK(step.parameterization.series().coeff(Exponent({5, 1})) == 1);
    // the change used the standard-representation monomial X1 X2 X3
    CHECK(step.change.p[2].coeff(Exponent({1, 1, 1})) != 0);
    // follow-up junk sits at (15,11) = (10,6) + nu_1 + nu_2 + nu_3
    CHECK(step.parameterization.series().coeff(Exponent({15, 11})) != 0);
}

TEST_CASE("elimination through the shifted family") {
    // gamma = 2 lambda - nu_1 with lambda = (4,3), n = 3
    Parameterization p = make_parameterization(
        2, 3, make_series(24, {{Exponent({4, 3}), Rat(1)}, {Exponent({5, 6}), Rat(1)}}));
    EliminationStep step = eliminate_term(p, Exponent({5, 6}));
    CHECK(step.parameterization.series().coeff(Exponent({5, 6})) == 0);
    CHECK(step.parameterization.series().coeff(Exponent({4, 3})) == 1);
    CHECK_FALSE(step.change.p[0].is_zero());  // sigma_1 carries the X_3 eta part
}

TEST_CASE("lambda_1 itself is never eliminable") {
    Parameterization p = make_parameterization(
        2, 5, make_series(30, {{Exponent({5, 1}), Rat(1)}, {Exponent({10, 6}), Rat(1)}}));
    CHECK_THROWS_AS(eliminate_term(p, Exponent({5, 1})), NotEliminableError);
    CHECK_THROWS_AS(eliminate_term(p, Exponent({5, 8})), Error);  // not in the support
}

TEST_CASE("non-eliminable targets are refused") {
    Parameterization p = make_parameterization(
        2, 5,
        make_series(30, {{Exponent({5, 1}), Rat(1)}, {Exponent({5, 8}), Rat(1)}}));
    CHECK_THROWS_AS(eliminate_term(p, Exponent({5, 8})), NotEliminableError);
}

TEST_CASE("quasi-short reduction collapses multiplicity two") {
    testgen::Rng rng(103);
    for (int trial = 0; trial < 5; ++trial) {
        Parameterization p =
            testgen::random_normalized_parameterization(rng, 2, Exponent({5, 3}), 40, 5);
        ReductionResult res = quasi_short_reduce(p);
        CHECK(res.parameterization.tail_support().empty());
        CHECK(zariski_exponents(res.parameterization).is_quasi_short);
    }
}

TEST_CASE("quasi-short reduction collapses the diagonal class") {
    testgen::Rng rng(107);
    for (long long n = 3; n <= 5; ++n) {
        Parameterization p =
            testgen::random_normalized_parameterization(rng, n, Exponent({1, 1}), 24, 4);
        ReductionResult res = quasi_short_reduce(p);
        CHECK(res.parameterization.tail_support().empty());
    }
}

TEST_CASE("reduction is idempotent and quasi-short inputs pass through") {
    Parameterization p = make_parameterization(
        2, 5,
        make_series(40, {{Exponent({5, 1}), Rat(1)},
                         {Exponent({5, 8}), Rat(1)},
                         {Exponent({10, 4}), Rat(1)}}));
    ReductionResult res = quasi_short_reduce(p);
    CHECK(res.changes.empty());
    CHECK(res.parameterization.series().agrees_with(p.series(), p.trunc()));

    testgen::Rng rng(109);
    Parameterization q =
        testgen::random_normalized_parameterization(rng, 5, Exponent({5, 1}), 30, 5);
    ReductionResult first = quasi_short_reduce(q);
    ReductionResult second = quasi_short_reduce(first.parameterization);
    CHECK(second.changes.empty());
    CHECK(second.parameterization.series().agrees_with(first.parameterization.series(),
                                                       first.parameterization.trunc()));
}

TEST_CASE("elimination beyond the minimal exponents") {
    // quasi-short input whose tail carries a term in delta + semigroup
    TopClass cls = make_top_class(6, Exponent({2, 1}));
    const Exponent delta({4, 11});  // 5*(2,1) + 6*(-1,1)
    const Exponent junk({4, 17});   // delta + nu_2, outside the eliminable set
    FracSeries s = make_series(30, {{Exponent({2, 1}), Rat(1)},
                                    {delta, Rat(1)},
                                    {junk, Rat(5, 2)}});
    Parameterization p = make_parameterization(2, 6, s);
    EliminationStep step = eliminate_beyond_zariski(p, junk, delta, {delta});
    CHECK(step.parameterization.series().coeff(junk) == 0);
    CHECK(step.parameterization.series().coeff(delta) == 1);
    CHECK(step.parameterization.series().coeff(Exponent({2, 1})) == 1);
}

TEST_CASE("normalization by homotheties") {
    SUBCASE("the monic example only admits the identity") {
        Parameterization p = make_parameterization(
            2, 5,
            make_series(40, {{Exponent({5, 1}), Rat(1)},
                             {Exponent({5, 8}), Rat(1)},
                             {Exponent({10, 4}), Rat(1)}}));
        auto outcome = normalize_coefficients(p, {Exponent({5, 8}), Exponent({10, 4})});
        REQUIRE(std::holds_alternative<Parameterization>(outcome));
        CHECK(std::get<Parameterization>(outcome).series().agrees_with(p.series(), p.trunc()));
    }
    SUBCASE("a perfect-power coefficient is rescaled away") {
        Parameterization p = make_parameterization(
            2, 2,
            make_series(20, {{Exponent({3, 1}), Rat(1)}, {Exponent({5, 1}), rat_of(4)}}));
        auto outcome = normalize_coefficients(p, {Exponent({5, 1})});
        REQUIRE(std::holds_alternative<Parameterization>(outcome));
        const Parameterization& q = std::get<Parameterization>(outcome);
        CHECK(q.series().coeff(Exponent({3, 1})) == 1);
        CHECK(q.series().coeff(Exponent({5, 1})) == 1);
    }
    SUBCASE("an irrational root yields a certificate") {
        Parameterization p = make_parameterization(
            2, 5,
            make_series(40, {{Exponent({5, 1}), Rat(1)}, {Exponent({5, 8}), rat_of(2)}}));
        auto outcome = normalize_coefficients(p, {Exponent({5, 8})});
        REQUIRE(std::holds_alternative<NormalizabilityCertificate>(outcome));
        const auto& cert = std::get<NormalizabilityCertificate>(outcome);
        CHECK(cert.shifts == std::vector<Exponent>{Exponent({0, 7})});
        CHECK(cert.values == std::vector<Rat>{rat_of(2)});
    }
    SUBCASE("dependent shifts are rejected") {
        Parameterization p = make_parameterization(
            2, 2,
            make_series(20, {{Exponent({3, 1}), Rat(1)},
                             {Exponent({5, 1}), rat_of(4)},
                             {Exponent({7, 1}), rat_of(9)}}));
        CHECK_THROWS_AS(normalize_coefficients(p, {Exponent({5, 1}), Exponent({7, 1})}),
                        IndependenceError);
    }
    SUBCASE("empty targets fix the leading coefficient") {
        Parameterization p = make_parameterization(
            2, 5, make_series(20, {{Exponent({5, 1}), rat_of(3)}}));
        auto outcome = normalize_coefficients(p, {});
        REQUIRE(std::holds_alternative<Parameterization>(outcome));
        CHECK(std::get<Parameterization>(outcome).series().coeff(Exponent({5, 1})) == 1);
    }
}

TEST_CASE("eliminations preserve the invariant exponents end to end") {
    testgen::Rng rng(113);
    TopClass cls = make_top_class(5, Exponent({3, 1}));
    for (int trial = 0; trial < 5; ++trial) {
        Parameterization p = testgen::random_quasi_short(rng, cls, CaseLabel::e, 30, 2);
        ZariskiResult before = zariski_exponents(p);
        CoordinateChange change = testgen::random_change(rng, 5, Exponent({3, 1}));
        Parameterization q = apply_change(p, change);
        ReductionResult res = quasi_short_reduce(q);
        ZariskiResult after = zariski_exponents(res.parameterization);
        std::vector<Exponent> lhs, rhs;
        for (const auto& e : before.exponents)
            if (e.total() <= 25) lhs.push_back(e);
        for (const auto& e : after.exponents)
            if (e.total() <= 25) rhs.push_back(e);
        CHECK(lhs == rhs);
    }
}
