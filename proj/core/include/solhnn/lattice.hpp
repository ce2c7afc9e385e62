#pragma once

#include "solhnn/matrix.hpp"

#include <optional>
#include <vector>

namespace solhnn {

// Finitely generated subgroup of Z^n stored as a row-style Hermite normal
// form basis: pivot columns strictly increase, pivots are positive, entries
// above a pivot are reduced into [0, pivot).  Equality of lattices is
// structural equality of bases.
class Lattice {
  public:
    explicit Lattice(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    Lattice(std::size_t ambient_dim, std::vector<IntVector> hnf_basis)
        : ambient_(ambient_dim), basis_(std::move(hnf_basis)) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<IntVector> &basis() const { return basis_; }

    // coordinates c with sum c_i * basis_i = v, or nullopt
    std::optional<IntVector> contains(const IntVector &v) const;

    bool contains_lattice(const Lattice &other) const;

    friend bool operator==(const Lattice &a, const Lattice &b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Lattice &a, const Lattice &b) { return !(a == b); }

  private:
    std::size_t ambient_;
    std::vector<IntVector> basis_;
};

// canonical HNF lattice spanned by the generators (all of dimension dim)
Lattice hnf(std::size_t dim, const std::vector<IntVector> &generators);

// row HNF of A together with a unimodular U such that U*A = H
struct HnfTransform {
    std::vector<IntVector> h; // HNF rows, zero rows kept at the bottom
    std::vector<IntVector> u;
    std::size_t rank;
};
HnfTransform hnf_with_transform(std::size_t dim, std::vector<IntVector> rows);

} // namespace solhnn
