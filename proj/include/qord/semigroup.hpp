#pragma once

// The value semigroup of a quasi-ordinary branch: generators nu_1..nu_{r+g}
// built from (n, lambda_1..lambda_g), the lattice chain Q_0 ⊂ ... ⊂ Q_g
// with indices n_1..n_g, standard representations, membership queries and
// the eliminable exponent set.

#include <optional>
#include <vector>

#include "qord/exponent.hpp"
#include "qord/lattice.hpp"

namespace qord {

class SemigroupData {
public:
    SemigroupData(int r, long long n, std::vector<Exponent> lambdas,
                  std::vector<Exponent> nus, std::vector<long long> indices,
                  std::vector<Lattice> lattices)
        : r_(r),
          n_(n),
          lambdas_(std::move(lambdas)),
          nus_(std::move(nus)),
          indices_(std::move(indices)),
          lattices_(std::move(lattices)) {}

    int r() const { return r_; }
    long long n() const { return n_; }
    int g() const { return static_cast<int>(lambdas_.size()); }
    const std::vector<Exponent>& lambdas() const { return lambdas_; }
    const Exponent& lambda1() const { return lambdas_.front(); }
    const std::vector<Exponent>& nus() const { return nus_; }
    const std::vector<long long>& indices() const { return indices_; }
    const std::vector<Lattice>& lattices() const { return lattices_; }  // Q_0..Q_g

private:
    int r_;
    long long n_;
    std::vector<Exponent> lambdas_;
    std::vector<Exponent> nus_;
    std::vector<long long> indices_;
    std::vector<Lattice> lattices_;
};

// Builds the semigroup data and validates it: the lambdas must be a
// strictly increasing ⪯-chain, each lambda_j must lie outside Q_{j-1},
// and the index product n_1...n_g must equal n. Throws SemigroupError.
SemigroupData build_semigroup(int r, long long n, const std::vector<Exponent>& lambdas);

// The unique integers (a_1..a_{r+k}) with 0 <= a_{r+j} < n_j and
// gamma = sum a_i nu_i, or nullopt when gamma is outside Q_k.
std::optional<std::vector<long long>> standard_representation(const SemigroupData& sg,
                                                              const Exponent& gamma, int level);

// gamma ∈ Γ = ⟨nu_1..nu_{r+g}⟩.
bool gamma_member(const SemigroupData& sg, const Exponent& gamma);

// gamma ∈ Γ ∪ ⋃_{lambda_{1i} >= n} (Γ + 2 lambda_1 − nu_i).
bool eliminable_set_member(const SemigroupData& sg, const Exponent& gamma);

// The support elements (all ≻ lambda_1) lying inside the eliminable set;
// empty iff the tail is quasi-short.
std::vector<Exponent> quasi_short_violations(const SemigroupData& sg,
                                             const std::vector<Exponent>& support);

// A support exponent delta is realizable in a parameterization with this
// characteristic data iff delta ∈ nZ^r + sum_{lambda_i ⪯ delta} lambda_i Z.
bool realizable_support_exponent(const SemigroupData& sg, const Exponent& delta);

}  // namespace qord
