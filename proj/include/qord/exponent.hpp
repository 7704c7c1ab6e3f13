#pragma once

// Integer exponent vectors in the t-coordinates, together with the
// product order and the graded-lex order used as the global tiebreak
// wherever a unique "next" exponent is needed.

#include <compare>
#include <vector>

namespace qord {

class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<long long> coords) : coords_(std::move(coords)) {}
    Exponent(std::initializer_list<long long> coords) : coords_(coords) {}

    static Exponent zero(int dim) { return Exponent(std::vector<long long>(dim, 0)); }
    static Exponent unit(int dim, int axis);  // the axis-th standard basis vector

    int dim() const { return static_cast<int>(coords_.size()); }
    long long operator[](int i) const { return coords_[i]; }
    long long& operator[](int i) { return coords_[i]; }
    const std::vector<long long>& coords() const { return coords_; }

    long long total() const;
    bool is_zero() const;
    bool nonnegative() const;

    Exponent& operator+=(const Exponent& other);
    Exponent& operator-=(const Exponent& other);
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator*(long long k, const Exponent& e);

    bool operator==(const Exponent& other) const = default;

private:
    std::vector<long long> coords_;
};

// a ⪯ b in the product order (coordinatewise <=). Dimension mismatch
// raises DimensionError.
bool product_le(const Exponent& a, const Exponent& b);
// a ≺ b: product_le(a, b) and a != b.
bool product_lt(const Exponent& a, const Exponent& b);
bool product_comparable(const Exponent& a, const Exponent& b);

// Total degree first, then lexicographic. Returns <0, 0, >0.
int graded_lex_compare(const Exponent& a, const Exponent& b);
bool graded_lex_le(const Exponent& a, const Exponent& b);
bool graded_lex_lt(const Exponent& a, const Exponent& b);

struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return graded_lex_lt(a, b); }
};

// The ⪯-minimal elements of a finite set: pairwise incomparable, and
// every input element dominates some returned element. Duplicates are
// collapsed; output sorted graded-lex.
std::vector<Exponent> minimal_antichain(std::vector<Exponent> elements);

bool is_antichain(const std::vector<Exponent>& elements);

}  // namespace qord
