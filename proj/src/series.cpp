#include "qord/series.hpp"

#include <algorithm>

#include "qord/errors.hpp"

namespace qord {

TruncationOrder::TruncationOrder(long long d) : degree_bound(d) {
    if (d < 1) throw InputError("truncation order must be >= 1");
}

FracSeries::FracSeries(int dim, long long valid_degree)
    : dim_(dim), valid_degree_(valid_degree) {
    if (dim < 1) throw DimensionError("series dimension must be >= 1");
}

FracSeries FracSeries::constant(int dim, const Rat& value, long long valid_degree) {
    FracSeries s(dim, valid_degree);
    s.add_term(Exponent::zero(dim), value);
    return s;
}

FracSeries FracSeries::monomial(int dim, const Exponent& exp, const Rat& coeff,
                                long long valid_degree) {
    FracSeries s(dim, valid_degree);
    s.add_term(exp, coeff);
    return s;
}

Rat FracSeries::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

long long FracSeries::min_degree() const {
    if (terms_.empty()) return valid_degree_ + 1;
    return terms_.begin()->first.total();  // graded-lex order: first term is minimal degree
}

long long FracSeries::min_degree_in_var(int i) const {
    long long best = valid_degree_ + 1;
    for (const auto& [e, c] : terms_) {
        if (e[i] >= 1) return e.total();  // graded-lex iteration: first hit is minimal
    }
    return best;
}

std::vector<Exponent> FracSeries::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

void FracSeries::add_term(const Exponent& exp, const Rat& value) {
    if (exp.dim() != dim_) throw DimensionError("term dimension differs from series dimension");
    if (!exp.nonnegative()) throw DimensionError("series exponents must be nonnegative");
    if (value == 0 || exp.total() > valid_degree_) return;
    auto [it, inserted] = terms_.try_emplace(exp, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

FracSeries FracSeries::truncated(long long new_valid_degree) const {
    FracSeries out(dim_, std::min(valid_degree_, new_valid_degree));
    for (const auto& [e, c] : terms_) {
        if (e.total() <= out.valid_degree_) out.terms_.emplace(e, c);
    }
    return out;
}

FracSeries& FracSeries::operator+=(const FracSeries& other) {
    if (dim_ != other.dim_) throw DimensionError("series dimensions differ");
    valid_degree_ = std::min(valid_degree_, other.valid_degree_);
    std::erase_if(terms_, [&](const auto& kv) { return kv.first.total() > valid_degree_; });
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& other) {
    if (dim_ != other.dim_) throw DimensionError("series dimensions differ");
    valid_degree_ = std::min(valid_degree_, other.valid_degree_);
    std::erase_if(terms_, [&](const auto& kv) { return kv.first.total() > valid_degree_; });
    for (const auto& [e, c] : other.terms_) add_term(e, Rat(-c));
    return *this;
}

FracSeries FracSeries::operator-() const {
    FracSeries out(dim_, valid_degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(-c));
    return out;
}

FracSeries FracSeries::scaled(const Rat& factor) const {
    if (factor == 0) return FracSeries(dim_, valid_degree_);
    FracSeries out(dim_, valid_degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(c * factor));
    return out;
}

FracSeries FracSeries::shifted(const Exponent& monomial, const Rat& factor) const {
    if (monomial.dim() != dim_) throw DimensionError("monomial dimension differs");
    if (!monomial.nonnegative()) throw DimensionError("shift monomial must be nonnegative");
    FracSeries out(dim_, valid_degree_ + monomial.total());
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + monomial, Rat(c * factor));
    return out;
}

std::optional<FracSeries> FracSeries::divided_by_monomial(const Exponent& monomial) const {
    if (monomial.dim() != dim_) throw DimensionError("monomial dimension differs");
    FracSeries out(dim_, valid_degree_ - monomial.total());
    for (const auto& [e, c] : terms_) {
        if (!product_le(monomial, e)) return std::nullopt;
        out.terms_.emplace(e - monomial, c);
    }
    return out;
}

bool FracSeries::agrees_with(const FracSeries& other, long long bound) const {
    if (dim_ != other.dim_) return false;
    for (const auto& [e, c] : terms_) {
        if (e.total() > bound) continue;
        if (other.coeff(e) != c) return false;
    }
    for (const auto& [e, c] : other.terms_) {
        if (e.total() > bound) continue;
        if (coeff(e) != c) return false;
    }
    return true;
}

FracSeries mul_capped(const FracSeries& a, const FracSeries& b, long long cap) {
    if (a.dim() != b.dim()) throw DimensionError("series dimensions differ");
    const long long natural =
        std::min(a.valid_degree() + b.min_degree(), b.valid_degree() + a.min_degree());
    FracSeries out(a.dim(), std::min(cap, natural));
    if (a.is_zero() || b.is_zero()) return out;
    const FracSeries& outer = a.terms().size() <= b.terms().size() ? a : b;
    const FracSeries& inner = a.terms().size() <= b.terms().size() ? b : a;
    for (const auto& [ea, ca] : outer.terms()) {
        const long long budget = out.valid_degree() - ea.total();
        if (budget < 0) continue;
        for (const auto& [eb, cb] : inner.terms()) {
            if (eb.total() > budget) break;  // graded-lex iteration is degree-sorted
            out.add_term(ea + eb, Rat(ca * cb));
        }
    }
    return out;
}

FracSeries mul(const FracSeries& a, const FracSeries& b) {
    const long long natural =
        std::min(a.valid_degree() + b.min_degree(), b.valid_degree() + a.min_degree());
    return mul_capped(a, b, natural);
}

FracSeries pow(const FracSeries& base, long long k) {
    if (k < 0) throw InputError("negative series power");
    FracSeries acc = FracSeries::constant(base.dim(), Rat(1), base.valid_degree());
    FracSeries sq = base;
    long long e = k;
    bool first = true;
    while (e > 0) {
        if (e & 1) acc = first && e == 1 ? sq : mul(acc, sq);
        e >>= 1;
        if (e > 0) sq = mul(sq, sq);
        first = false;
    }
    if (k == 0) return FracSeries::constant(base.dim(), Rat(1), base.valid_degree());
    return acc;
}

FracSeries rational_power(const FracSeries& base, long long p, long long q) {
    if (q < 1) throw InputError("rational power requires a positive root index");
    const Rat c = base.constant_term();
    if (c == 0) throw NotAUnitError("rational power of a series with zero constant term");

    Rat c_root = c;
    if (q > 1) {
        auto root = exact_root(c, q);
        if (!root)
            throw FieldError("constant term " + rational_to_string(c) +
                             " has no exact rational root of index " + std::to_string(q));
        c_root = *root;
    }
    const Rat scale = rat_pow(c_root, p);

    // z = base/c - 1 lies in the maximal ideal
    FracSeries z = base.scaled(Rat(1) / c);
    z.add_term(Exponent::zero(base.dim()), Rat(-1));

    const long long v = base.valid_degree();
    const Rat alpha = rat_of(p, q);
    FracSeries acc = FracSeries::constant(base.dim(), Rat(1), v);
    FracSeries zk = acc;
    for (long long k = 1; k <= v; ++k) {
        zk = mul_capped(zk, z, v);
        if (zk.is_zero()) break;
        acc += zk.scaled(binomial(alpha, k));
    }
    return acc.scaled(scale);
}

namespace {

// Substitutes maps[v..] into s, which must not involve variables < v.
// Intermediate results are capped at `cap`.
FracSeries substitute_from(const FracSeries& s, const std::vector<FracSeries>& maps, int v,
                           long long cap) {
    const int dim = s.dim();
    if (v == dim || s.is_zero()) return s.truncated(cap);

    long long max_k = 0;
    for (const auto& [e, c] : s.terms()) max_k = std::max(max_k, e[v]);
    if (max_k == 0) return substitute_from(s, maps, v + 1, cap);

    // slice s by the exponent of variable v
    std::vector<FracSeries> slices(max_k + 1, FracSeries(dim, s.valid_degree()));
    for (const auto& [e, c] : s.terms()) {
        Exponent r = e;
        const long long k = r[v];
        r[v] = 0;
        slices[k].add_term(r, c);
    }
    FracSeries acc(dim, cap);
    for (long long k = max_k; k >= 0; --k) {
        if (!acc.is_zero()) acc = mul_capped(acc, maps[v], cap);
        if (!slices[k].is_zero()) acc += substitute_from(slices[k], maps, v + 1, cap);
    }
    return acc;
}

void check_diagonal(const std::vector<FracSeries>& maps, int dim) {
    if (static_cast<int>(maps.size()) != dim)
        throw DimensionError("diagonal map family size differs from dimension");
    for (int i = 0; i < dim; ++i) {
        if (maps[i].dim() != dim) throw DimensionError("map dimension differs");
        if (maps[i].coeff(Exponent::unit(dim, i)) == 0)
            throw CompositionError("map " + std::to_string(i + 1) +
                                   " has zero linear coefficient (not diagonal-type)");
        for (const auto& [e, c] : maps[i].terms())
            if (e[i] < 1)
                throw CompositionError("map " + std::to_string(i + 1) +
                                       " has a term not divisible by its variable");
    }
}

}  // namespace

FracSeries substitute_diagonal(const FracSeries& s, const std::vector<FracSeries>& maps) {
    const int dim = s.dim();
    check_diagonal(maps, dim);
    // Unknown parts of map_i enter through terms with e_i >= 1 and cost
    // one map factor, so validity is min over the affected variables.
    long long valid = s.valid_degree();
    for (int i = 0; i < dim; ++i) {
        const long long mu = s.min_degree_in_var(i);
        if (mu <= s.valid_degree())
            valid = std::min(valid, maps[i].valid_degree() - 1 + mu);
    }
    return substitute_from(s, maps, 0, valid);
}

std::vector<FracSeries> invert_diagonal(const std::vector<FracSeries>& maps) {
    const int dim = maps.empty() ? 0 : maps[0].dim();
    check_diagonal(maps, dim);

    std::vector<FracSeries> units;
    long long valid = maps[0].valid_degree();
    for (int i = 0; i < dim; ++i) {
        auto u = maps[i].divided_by_monomial(Exponent::unit(dim, i));
        FracSeries ui = *u;  // divisibility guaranteed by check_diagonal
        if (ui.constant_term() == 0)
            throw InversionError("map factor " + std::to_string(i + 1) + " is not a unit");
        valid = std::min(valid, maps[i].valid_degree());
        units.push_back(ui);
    }

    // Solve w_i * u_i(t_1 w_1, ..., t_r w_r) = 1 by fixed-point iteration;
    // each pass is exact one total degree further.
    std::vector<FracSeries> w;
    for (int i = 0; i < dim; ++i)
        w.push_back(FracSeries::constant(dim, Rat(1) / units[i].constant_term(), valid - 1));
    for (long long pass = 0; pass <= valid; ++pass) {
        std::vector<FracSeries> psi;
        for (int i = 0; i < dim; ++i) psi.push_back(w[i].shifted(Exponent::unit(dim, i), Rat(1)));
        bool stable = true;
        for (int i = 0; i < dim; ++i) {
            FracSeries composed = substitute_from(units[i].truncated(valid - 1), psi, 0, valid - 1);
            FracSeries wi = rational_power(composed, -1, 1);
            if (!(wi.terms() == w[i].terms())) stable = false;
            w[i] = std::move(wi);
        }
        if (stable) break;
    }

    std::vector<FracSeries> inverse;
    for (int i = 0; i < dim; ++i) inverse.push_back(w[i].shifted(Exponent::unit(dim, i), Rat(1)));

    // round-trip verification within the propagated validity
    for (int i = 0; i < dim; ++i) {
        FracSeries round = substitute_diagonal(maps[i], inverse);
        FracSeries ti = FracSeries::monomial(dim, Exponent::unit(dim, i), Rat(1), round.valid_degree());
        if (!round.agrees_with(ti, round.valid_degree()))
            throw InversionError("diagonal inversion failed the round-trip check");
    }
    return inverse;
}

FracSeries partial_derivative(const FracSeries& s, int i) {
    if (i < 0 || i >= s.dim()) throw DimensionError("derivative coordinate out of range");
    FracSeries out(s.dim(), s.valid_degree() - 1);
    for (const auto& [e, c] : s.terms()) {
        if (e[i] == 0) continue;
        Exponent d = e;
        d[i] -= 1;
        out.add_term(d, Rat(c * rat_of(e[i])));
    }
    return out;
}

std::vector<FracSeries> identity_maps(int dim, long long valid_degree) {
    std::vector<FracSeries> maps;
    for (int i = 0; i < dim; ++i)
        maps.push_back(FracSeries::monomial(dim, Exponent::unit(dim, i), Rat(1), valid_degree));
    return maps;
}

}  // namespace qord
