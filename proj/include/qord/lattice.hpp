#pragma once

// Subgroups of Z^r presented by generators and reduced to a canonical
// column Hermite basis: pivots positive, entries above each pivot zero,
// entries of earlier basis vectors in a pivot row reduced into
// [0, pivot). Two lattices are equal iff their canonical bases are
// identical. Membership solves carry witness coefficients in terms of
// the original generators.

#include <optional>
#include <vector>

#include "qord/exponent.hpp"

namespace qord {

class Lattice {
public:
    Lattice(int dim, std::vector<Exponent> generators);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Exponent>& generators() const { return generators_; }
    const std::vector<Exponent>& basis() const { return basis_; }

    // Coefficients x with v = sum x_j * basis_j, when v lies in the span.
    std::optional<std::vector<long long>> solve_in_basis(const Exponent& v) const;

    // Witness coefficients c with v = sum c_i * generators_i.
    std::optional<std::vector<long long>> member(const Exponent& v) const;
    bool contains(const Exponent& v) const { return solve_in_basis(v).has_value(); }

    Lattice joined(const Exponent& extra) const;

    bool operator==(const Lattice& other) const {
        return dim_ == other.dim_ && basis_ == other.basis_;
    }

private:
    int dim_ = 0;
    std::vector<Exponent> generators_;
    std::vector<Exponent> basis_;        // canonical; basis_[j] has pivot row pivot_rows_[j]
    std::vector<int> pivot_rows_;
    // basis_[j] = sum_i basis_in_gens_[i][j] * generators_[i]
    std::vector<std::vector<long long>> basis_in_gens_;
};

// |L_sup : L_sub| for a finite-index pair. Throws ContainmentError when
// L_sub is not contained in L_sup and InfiniteIndexError when the ranks
// differ.
long long lattice_index(const Lattice& sub, const Lattice& sup);

}  // namespace qord
