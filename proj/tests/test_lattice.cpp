#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qord/errors.hpp"
#include "qord/lattice.hpp"

using namespace qord;

namespace {

// Exhaustive coefficient-box oracle for lattice membership.
bool member_by_search(const std::vector<Exponent>& gens, const Exponent& v, long long box) {
    std::vector<long long> c(gens.size(), -box);
    if (gens.empty()) return v.is_zero();
    while (true) {
        Exponent sum = Exponent::zero(v.dim());
        for (std::size_t i = 0; i < gens.size(); ++i) sum += c[i] * gens[i];
        if (sum == v) return true;
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > box) {
            c[k] = -box;
            ++k;
        }
        if (k == c.size()) return false;
    }
}

std::vector<Exponent> z2_scaled(long long n) {
    return {Exponent({n, 0}), Exponent({0, n})};
}

}  // namespace

TEST_CASE("product order examples") {
    CHECK(product_le(Exponent({5, 1}), Exponent({5, 8})));
    CHECK_FALSE(product_le(Exponent({10, 4}), Exponent({5, 8})));
    CHECK(product_le(Exponent({3, 7}), Exponent({3, 7})));
    CHECK_THROWS_AS(product_le(Exponent({1, 2}), Exponent({1, 2, 3})), DimensionError);
}

TEST_CASE("strict product order refines graded-lex") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> pick(0, 12);
    for (int trial = 0; trial < 2000; ++trial) {
        Exponent a({pick(rng), pick(rng)});
        Exponent b({pick(rng), pick(rng)});
        if (product_lt(a, b)) {
            CHECK(a.total() <= b.total());
            CHECK(graded_lex_lt(a, b));
        }
    }
}

TEST_CASE("membership with witness") {
    SUBCASE("5Z^2 + (5,1)Z does not reach (3,2)") {
        auto gens = z2_scaled(5);
        gens.push_back(Exponent({5, 1}));
        Lattice l(2, gens);
        CHECK_FALSE(l.member(Exponent({3, 2})).has_value());
        CHECK(member_by_search(gens, Exponent({3, 2}), 20) == false);
    }
    SUBCASE("4Z^2 + (2,2)Z reaches (6,6) with a checkable witness") {
        auto gens = z2_scaled(4);
        gens.push_back(Exponent({2, 2}));
        Lattice l(2, gens);
        auto witness = l.member(Exponent({6, 6}));
        REQUIRE(witness.has_value());
        Exponent sum = Exponent::zero(2);
        for (std::size_t i = 0; i < gens.size(); ++i) sum += (*witness)[i] * gens[i];
        CHECK(sum == Exponent({6, 6}));
        CHECK(member_by_search(gens, Exponent({6, 6}), 20));
    }
    SUBCASE("zero always lies inside with the zero witness") {
        auto gens = z2_scaled(5);
        gens.push_back(Exponent({5, 1}));
        Lattice l(2, gens);
        auto witness = l.member(Exponent::zero(2));
        REQUIRE(witness.has_value());
        for (long long c : *witness) CHECK(c == 0);
    }
}

TEST_CASE("membership agrees with the exhaustive oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> entry(-10, 10);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Exponent> gens;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) gens.push_back(Exponent({entry(rng), entry(rng)}));
        Lattice l(2, gens);
        for (int probe = 0; probe < 6; ++probe) {
            Exponent v({entry(rng), entry(rng)});
            const bool fast = l.contains(v);
            // B = 50 is far beyond what entries <= 10 need in a 2D solve
            const bool slow = member_by_search(gens, v, 12);
            if (slow) CHECK(fast);
            if (!fast) CHECK_FALSE(slow);
            auto witness = l.member(v);
            if (witness) {
                Exponent sum = Exponent::zero(2);
                for (std::size_t i = 0; i < gens.size(); ++i) sum += (*witness)[i] * gens[i];
                CHECK(sum == v);
            }
        }
    }
}

TEST_CASE("index examples") {
    Lattice q0(2, z2_scaled(5));
    auto gens = z2_scaled(5);
    gens.push_back(Exponent({5, 1}));
    Lattice q1(2, gens);
    CHECK(lattice_index(q0, q1) == 5);

    Lattice a0(2, z2_scaled(4));
    auto agens = z2_scaled(4);
    agens.push_back(Exponent({2, 2}));
    Lattice a1(2, agens);
    CHECK(lattice_index(a0, a1) == 2);

    CHECK(lattice_index(q1, q1) == 1);
}

TEST_CASE("index errors") {
    Lattice q0(2, z2_scaled(5));
    auto gens = z2_scaled(5);
    gens.push_back(Exponent({5, 1}));
    Lattice q1(2, gens);
    CHECK_THROWS_AS(lattice_index(q1, q0), ContainmentError);
    Lattice line(2, {Exponent({5, 0})});
    CHECK_THROWS_AS(lattice_index(line, q1), InfiniteIndexError);
}

TEST_CASE("index is multiplicative along chains") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long long> entry(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const long long n = entry(rng) + 1;
        Lattice small(2, z2_scaled(n * 2));
        Lattice mid(2, z2_scaled(n));
        std::vector<Exponent> gens = z2_scaled(n);
        gens.push_back(Exponent({entry(rng), entry(rng)}));
        Lattice big(2, gens);
        CHECK(lattice_index(small, mid) * lattice_index(mid, big) == lattice_index(small, big));
    }
}

TEST_CASE("canonical basis is idempotent") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> entry(-8, 8);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Exponent> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(Exponent({entry(rng), entry(rng), entry(rng)}));
        Lattice l(3, gens);
        Lattice again(3, l.basis());
        CHECK(l.basis() == again.basis());
        CHECK(l == again);
    }
}

TEST_CASE("minimal antichain") {
    SUBCASE("two incomparable minima survive") {
        auto out = minimal_antichain(
            {Exponent({5, 8}), Exponent({10, 4}), Exponent({5, 9}), Exponent({10, 5})});
        CHECK(out == std::vector<Exponent>{Exponent({5, 8}), Exponent({10, 4})});
    }
    SUBCASE("singleton") {
        CHECK(minimal_antichain({Exponent({3, 3})}) == std::vector<Exponent>{Exponent({3, 3})});
    }
    SUBCASE("dominated element removed") {
        auto out = minimal_antichain({Exponent({1, 2}), Exponent({2, 1}), Exponent({2, 2})});
        CHECK(out == std::vector<Exponent>{Exponent({1, 2}), Exponent({2, 1})});
    }
    SUBCASE("empty input") { CHECK(minimal_antichain({}).empty()); }
    SUBCASE("output is an antichain dominating the input") {
        std::mt19937_64 rng(43);
        std::uniform_int_distribution<long long> pick(0, 9);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Exponent> in;
            for (int i = 0; i < 12; ++i) in.push_back(Exponent({pick(rng), pick(rng)}));
            auto out = minimal_antichain(in);
            CHECK(is_antichain(out));
            for (const auto& e : in) {
                bool covered = false;
                for (const auto& m : out) covered = covered || product_le(m, e);
                CHECK(covered);
            }
        }
    }
}
