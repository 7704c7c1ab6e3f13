#include "qord/lattice.hpp"

#include <cstdlib>

#include "qord/errors.hpp"
#include "qord/rational.hpp"

namespace qord {

namespace {

// Columns of m live in Z^dim; u tracks the column operations so that
// current column j == original columns combined with u[.][j].
struct ColumnMatrix {
    std::vector<std::vector<long long>> cols;  // cols[j][row]
    std::vector<std::vector<long long>> u;     // u[j][i]: col_j = sum_i u[j][i] * orig_i

    void axpy(std::size_t target, std::size_t source, long long q) {
        // col_target -= q * col_source
        for (std::size_t r = 0; r < cols[target].size(); ++r)
            cols[target][r] -= q * cols[source][r];
        for (std::size_t i = 0; i < u[target].size(); ++i)
            u[target][i] -= q * u[source][i];
    }
    void negate(std::size_t j) {
        for (auto& v : cols[j]) v = -v;
        for (auto& v : u[j]) v = -v;
    }
    void swap_cols(std::size_t a, std::size_t b) {
        std::swap(cols[a], cols[b]);
        std::swap(u[a], u[b]);
    }
};

}  // namespace

Lattice::Lattice(int dim, std::vector<Exponent> generators)
    : dim_(dim), generators_(std::move(generators)) {
    for (const Exponent& g : generators_)
        if (g.dim() != dim_) throw DimensionError("generator dimension differs from lattice dimension");

    const std::size_t k = generators_.size();
    ColumnMatrix m;
    m.cols.resize(k, std::vector<long long>(dim_, 0));
    m.u.resize(k, std::vector<long long>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        m.u[j][j] = 1;
        for (int r = 0; r < dim_; ++r) m.cols[j][r] = generators_[j][r];
    }

    std::size_t col = 0;
    for (int row = 0; row < dim_ && col < k; ++row) {
        // gcd-reduce entries of this row across columns col..k-1
        while (true) {
            std::size_t best = k;
            for (std::size_t j = col; j < k; ++j) {
                if (m.cols[j][row] == 0) continue;
                if (best == k || std::llabs(m.cols[j][row]) < std::llabs(m.cols[best][row])) best = j;
            }
            if (best == k) break;  // row is all zero
            m.swap_cols(col, best);
            bool others = false;
            for (std::size_t j = col + 1; j < k; ++j) {
                if (m.cols[j][row] == 0) continue;
                const long long q = m.cols[j][row] / m.cols[col][row];
                m.axpy(j, col, q);
                if (m.cols[j][row] != 0) others = true;
            }
            if (!others) break;
        }
        if (m.cols[col][row] != 0) {
            if (m.cols[col][row] < 0) m.negate(col);
            pivot_rows_.push_back(row);
            ++col;
        }
    }
    const std::size_t rank = col;

    // canonical reduction: earlier columns reduced modulo each pivot
    for (std::size_t j = 0; j < rank; ++j) {
        const int p = pivot_rows_[j];
        const long long piv = m.cols[j][p];
        for (std::size_t l = 0; l < j; ++l) {
            long long q = m.cols[l][p] / piv;
            long long rem = m.cols[l][p] - q * piv;
            if (rem < 0) q -= 1;
            if (q != 0) m.axpy(l, j, q);
        }
    }

    basis_.reserve(rank);
    basis_in_gens_.assign(k, std::vector<long long>(rank, 0));
    for (std::size_t j = 0; j < rank; ++j) {
        basis_.push_back(Exponent(m.cols[j]));
        for (std::size_t i = 0; i < k; ++i) basis_in_gens_[i][j] = m.u[j][i];
    }
}

std::optional<std::vector<long long>> Lattice::solve_in_basis(const Exponent& v) const {
    if (v.dim() != dim_) throw DimensionError("vector dimension differs from lattice dimension");
    std::vector<long long> w = v.coords();
    std::vector<long long> x(basis_.size(), 0);
    // basis_[j] has zeros above its pivot row, so solve pivots in order
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        const int p = pivot_rows_[j];
        const long long piv = basis_[j][p];
        if (w[p] % piv != 0) return std::nullopt;
        x[j] = w[p] / piv;
        for (int r = 0; r < dim_; ++r) w[r] -= x[j] * basis_[j][r];
    }
    for (long long c : w)
        if (c != 0) return std::nullopt;
    return x;
}

std::optional<std::vector<long long>> Lattice::member(const Exponent& v) const {
    auto x = solve_in_basis(v);
    if (!x) return std::nullopt;
    std::vector<long long> witness(generators_.size(), 0);
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j)
            witness[i] += basis_in_gens_[i][j] * (*x)[j];
    return witness;
}

Lattice Lattice::joined(const Exponent& extra) const {
    std::vector<Exponent> gens = generators_;
    gens.push_back(extra);
    return Lattice(dim_, std::move(gens));
}

long long lattice_index(const Lattice& sub, const Lattice& sup) {
    if (sub.dim() != sup.dim()) throw DimensionError("lattice dimensions differ");
    const int m = sup.rank();
    std::vector<std::vector<long long>> x;  // columns: sub basis vectors in sup coordinates
    for (const Exponent& b : sub.basis()) {
        auto coords = sup.solve_in_basis(b);
        if (!coords) throw ContainmentError("first lattice is not contained in the second");
        x.push_back(*coords);
    }
    if (sub.rank() < m) throw InfiniteIndexError("infinite index: ranks differ");

    // |det| of the m x m integer matrix via exact fraction-free elimination
    std::vector<std::vector<Int>> a(m, std::vector<Int>(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) a[i][j] = int_of(x[j][i]);
    Int det = 1;
    bool negative = false;
    Int prev = 1;
    for (int k = 0; k < m; ++k) {
        int piv = -1;
        for (int i = k; i < m; ++i)
            if (a[i][k] != 0) { piv = i; break; }
        if (piv < 0) throw InfiniteIndexError("infinite index: degenerate coordinates");
        if (piv != k) { std::swap(a[piv], a[k]); negative = !negative; }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    det = (m == 0) ? Int(1) : a[m - 1][m - 1];
    if (negative) det = -det;
    Int idx = det < 0 ? Int(-det) : det;
    if (idx == 0) throw InfiniteIndexError("infinite index: degenerate coordinates");
    return static_cast<long long>(idx.get_si());
}

}  // namespace qord
