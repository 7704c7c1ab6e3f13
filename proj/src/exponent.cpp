#include "qord/exponent.hpp"

#include <algorithm>

#include "qord/errors.hpp"

namespace qord {

namespace {
void require_same_dim(const Exponent& a, const Exponent& b) {
    if (a.dim() != b.dim()) throw DimensionError("exponent dimensions differ");
}
}  // namespace

Exponent Exponent::unit(int dim, int axis) {
    Exponent e = zero(dim);
    e[axis] = 1;
    return e;
}

long long Exponent::total() const {
    long long s = 0;
    for (long long c : coords_) s += c;
    return s;
}

bool Exponent::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c == 0; });
}

bool Exponent::nonnegative() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c >= 0; });
}

Exponent& Exponent::operator+=(const Exponent& other) {
    require_same_dim(*this, other);
    for (int i = 0; i < dim(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Exponent& Exponent::operator-=(const Exponent& other) {
    require_same_dim(*this, other);
    for (int i = 0; i < dim(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Exponent operator*(long long k, const Exponent& e) {
    Exponent r = e;
    for (int i = 0; i < r.dim(); ++i) r[i] *= k;
    return r;
}

bool product_le(const Exponent& a, const Exponent& b) {
    require_same_dim(a, b);
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool product_lt(const Exponent& a, const Exponent& b) {
    return product_le(a, b) && a != b;
}

bool product_comparable(const Exponent& a, const Exponent& b) {
    return product_le(a, b) || product_le(b, a);
}

int graded_lex_compare(const Exponent& a, const Exponent& b) {
    require_same_dim(a, b);
    const long long ta = a.total();
    const long long tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool graded_lex_le(const Exponent& a, const Exponent& b) { return graded_lex_compare(a, b) <= 0; }
bool graded_lex_lt(const Exponent& a, const Exponent& b) { return graded_lex_compare(a, b) < 0; }

std::vector<Exponent> minimal_antichain(std::vector<Exponent> elements) {
    std::sort(elements.begin(), elements.end(), GradedLexLess{});
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<Exponent> out;
    // graded-lex order refines ⪯, so earlier elements never dominate later ones
    for (const Exponent& e : elements) {
        bool dominated = false;
        for (const Exponent& m : out) {
            if (product_le(m, e)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(e);
    }
    return out;
}

bool is_antichain(const std::vector<Exponent>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (product_comparable(elements[i], elements[j])) return false;
    return true;
}

}  // namespace qord
