#include "qord/semigroup.hpp"

#include "qord/errors.hpp"

namespace qord {

SemigroupData build_semigroup(int r, long long n, const std::vector<Exponent>& lambdas) {
    if (r < 1) throw SemigroupError("dimension must be >= 1");
    if (n < 2) throw SemigroupError("multiplicity must be >= 2");
    for (const Exponent& l : lambdas) {
        if (l.dim() != r) throw DimensionError("characteristic exponent dimension differs");
        if (!l.nonnegative()) throw SemigroupError("characteristic exponents must be nonnegative");
    }
    for (std::size_t j = 1; j < lambdas.size(); ++j)
        if (!product_lt(lambdas[j - 1], lambdas[j]))
            throw SemigroupError("characteristic exponents are not strictly increasing");

    std::vector<Exponent> q0_gens;
    for (int i = 0; i < r; ++i) q0_gens.push_back(n * Exponent::unit(r, i));
    std::vector<Lattice> lattices{Lattice(r, q0_gens)};

    std::vector<long long> indices;
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        if (lattices[j].contains(lambdas[j]))
            throw SemigroupError("invalid characteristic sequence: exponent " +
                                 std::to_string(j + 1) + " lies in the previous lattice");
        Lattice next = lattices[j].joined(lambdas[j]);
        indices.push_back(lattice_index(lattices[j], next));
        lattices.push_back(std::move(next));
    }

    long long prod = 1;
    for (long long ni : indices) prod *= ni;
    if (prod != n)
        throw SemigroupError("inconsistent multiplicity: index product " + std::to_string(prod) +
                             " differs from n = " + std::to_string(n));

    std::vector<Exponent> nus;
    for (int i = 0; i < r; ++i) nus.push_back(n * Exponent::unit(r, i));
    if (!lambdas.empty()) {
        nus.push_back(lambdas[0]);
        for (std::size_t i = 1; i < lambdas.size(); ++i)
            nus.push_back(indices[i - 1] * nus.back() + lambdas[i] - lambdas[i - 1]);
    }

    return SemigroupData(r, n, lambdas, nus, indices, lattices);
}

std::optional<std::vector<long long>> standard_representation(const SemigroupData& sg,
                                                              const Exponent& gamma, int level) {
    if (gamma.dim() != sg.r()) throw DimensionError("exponent dimension differs");
    if (level < 0 || level > sg.g()) throw InputError("level out of range");
    const int r = sg.r();
    std::vector<long long> rep(r + level, 0);
    Exponent rest = gamma;
    // descend level by level: Q_k / Q_{k-1} is cyclic of order n_k
    // generated by the class of nu_{r+k}
    for (int k = level; k >= 1; --k) {
        const Exponent& nu = sg.nus()[r + k - 1];
        const Lattice& below = sg.lattices()[k - 1];
        bool found = false;
        for (long long a = 0; a < sg.indices()[k - 1]; ++a) {
            if (below.contains(rest - a * nu)) {
                rep[r + k - 1] = a;
                rest -= a * nu;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    for (int i = 0; i < r; ++i) {
        if (rest[i] % sg.n() != 0) return std::nullopt;
        rep[i] = rest[i] / sg.n();
    }
    return rep;
}

bool gamma_member(const SemigroupData& sg, const Exponent& gamma) {
    auto rep = standard_representation(sg, gamma, sg.g());
    if (!rep) return false;
    for (int i = 0; i < sg.r(); ++i)
        if ((*rep)[i] < 0) return false;
    return true;
}

bool eliminable_set_member(const SemigroupData& sg, const Exponent& gamma) {
    if (gamma_member(sg, gamma)) return true;
    if (sg.g() == 0) return false;
    const Exponent& l1 = sg.lambda1();
    for (int i = 0; i < sg.r(); ++i) {
        if (l1[i] < sg.n()) continue;
        const Exponent shifted = gamma - 2 * l1 + sg.nus()[i];
        if (gamma_member(sg, shifted)) return true;
    }
    return false;
}

std::vector<Exponent> quasi_short_violations(const SemigroupData& sg,
                                             const std::vector<Exponent>& support) {
    std::vector<Exponent> out;
    for (const Exponent& e : support)
        if (eliminable_set_member(sg, e)) out.push_back(e);
    return out;
}

bool realizable_support_exponent(const SemigroupData& sg, const Exponent& delta) {
    std::vector<Exponent> gens;
    for (int i = 0; i < sg.r(); ++i) gens.push_back(sg.n() * Exponent::unit(sg.r(), i));
    for (const Exponent& l : sg.lambdas())
        if (product_le(l, delta)) gens.push_back(l);
    return Lattice(sg.r(), gens).contains(delta);
}

}  // namespace qord
