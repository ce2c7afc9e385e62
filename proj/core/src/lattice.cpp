#include "solhnn/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace solhnn {

namespace {

// row HNF in place; rows may carry a parallel transform matrix
std::size_t hnf_rows(std::size_t dim, std::vector<IntVector> &rows, std::vector<IntVector> *u) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        // gather a pivot at row r
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        if (u)
            std::swap((*u)[r], (*u)[p]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            while (rows[i][c] != 0) {
                // Euclid on the pivot column: keep the smaller entry at row r
                if (abs_int(rows[r][c]) > abs_int(rows[i][c])) {
                    std::swap(rows[r], rows[i]);
                    if (u)
                        std::swap((*u)[r], (*u)[i]);
                    continue;
                }
                Int q = rows[i][c] / rows[r][c];
                for (std::size_t j = 0; j < dim; ++j)
                    rows[i][j] -= q * rows[r][j];
                if (u)
                    for (std::size_t j = 0; j < (*u)[i].size(); ++j)
                        (*u)[i][j] -= q * (*u)[r][j];
            }
        }
        if (rows[r][c] < 0) {
            for (auto &x : rows[r])
                x = -x;
            if (u)
                for (auto &x : (*u)[r])
                    x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floordiv(rows[i][c], rows[r][c]);
            if (q == 0)
                continue;
            for (std::size_t j = 0; j < dim; ++j)
                rows[i][j] -= q * rows[r][j];
            if (u)
                for (std::size_t j = 0; j < (*u)[i].size(); ++j)
                    (*u)[i][j] -= q * (*u)[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

Lattice hnf(std::size_t dim, const std::vector<IntVector> &generators) {
    std::vector<IntVector> rows;
    for (auto &g : generators) {
        if (g.size() != dim)
            throw std::invalid_argument("hnf: generator dimension mismatch");
        rows.push_back(g);
    }
    std::size_t r = hnf_rows(dim, rows, nullptr);
    rows.resize(r);
    return Lattice(dim, std::move(rows));
}

HnfTransform hnf_with_transform(std::size_t dim, std::vector<IntVector> rows) {
    std::vector<IntVector> u(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        u[i].assign(rows.size(), 0);
        u[i][i] = 1;
    }
    std::size_t r = hnf_rows(dim, rows, &u);
    return HnfTransform{std::move(rows), std::move(u), r};
}

std::optional<IntVector> Lattice::contains(const IntVector &v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("lattice membership: dimension mismatch");
    IntVector residual = v;
    IntVector coords(basis_.size(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t piv = 0;
        while (basis_[i][piv] == 0)
            ++piv;
        Int q = residual[piv] / basis_[i][piv];
        if (q * basis_[i][piv] != residual[piv])
            return std::nullopt;
        coords[i] = q;
        for (std::size_t j = 0; j < ambient_; ++j)
            residual[j] -= q * basis_[i][j];
    }
    for (auto &x : residual)
        if (x != 0)
            return std::nullopt;
    return coords;
}

bool Lattice::contains_lattice(const Lattice &other) const {
    if (other.ambient_ != ambient_)
        return false;
    for (auto &b : other.basis_)
        if (!contains(b))
            return false;
    return true;
}

} // namespace solhnn
