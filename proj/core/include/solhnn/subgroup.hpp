#pragma once

#include "solhnn/hnn.hpp"
#include "solhnn/lattice.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace solhnn {

// A finitely generated subgroup of the abelian part of a base group, kept as
// an HNF lattice.  For the wreath base the lattice lives on the exponent
// window [lo, lo + ambient - 1] of Z^infty; the whole object is understood as
// theta^(-denom_exp) of the stored integer lattice, with denom_exp minimal.
struct WindowLattice {
    GroupSpec::Kind kind = GroupSpec::Kind::FreeAbelian;
    long long lo = 0; // wreath only: exponent of the first coordinate
    Lattice L{0};
    long long denom_exp = 0;

    bool is_zero() const { return L.is_zero(); }
    long long hi() const { return lo + static_cast<long long>(L.ambient_dim()) - 1; }

    static WindowLattice from_vectors(const GroupSpec &g, const std::vector<IntVector> &gens);
    static WindowLattice from_polys(const std::vector<LaurentPoly> &gens);
    static WindowLattice full_fiber(const GroupSpec &g); // abelian only: Z^rank

    std::vector<LaurentPoly> poly_basis() const; // wreath only
    friend bool operator==(const WindowLattice &a, const WindowLattice &b);
};

using FiberElement = std::variant<IntVector, LaurentPoly>;
std::string fiber_str(const FiberElement &w);

// homomorphism G -> abelian group with theta-invariant restriction to the base
class Functional {
  public:
    enum class Kind { Chi, SExponent, Linear };

    static Functional chi() { return Functional(Kind::Chi); }
    static Functional s_exponent() { return Functional(Kind::SExponent); }
    // linear covector on the fiber, over Z (modulus 0) or Z/modulus;
    // throws unless phi(theta(b)) == phi(b) for all b (shown on failure)
    static Functional linear(const GroupSpec &g, IntVector covector, Int modulus);

    Kind kind() const { return kind_; }
    const IntVector &covector() const { return covector_; }
    const Int &modulus() const { return modulus_; }

  private:
    explicit Functional(Kind k) : kind_(k) {}
    Kind kind_;
    IntVector covector_;
    Int modulus_ = 0;
};

WindowLattice conj_lattice(const GroupSpec &g, const HnnElement &x, const WindowLattice &B);

// shift by s^i and conjugate by t^j directly (helpers also used by the search)
WindowLattice shift_lattice(const WindowLattice &B, long long i);
WindowLattice theta_lattice(const GroupSpec &g, const WindowLattice &B, long long j); // signed j

enum class CmpVerdict { Equal, FirstInSecond, SecondInFirst, Incomparable };
struct LatticeCmp {
    CmpVerdict verdict;
    // strictness certificate: element of the larger lattice outside the
    // smaller one (at the common denominator level)
    std::optional<FiberElement> witness;
};
LatticeCmp lattice_compare(const GroupSpec &g, const WindowLattice &B1, const WindowLattice &B2);

struct DegreeExtremes {
    long long max_degree;
    LaurentPoly max_witness;
    long long min_degree;
    LaurentPoly min_witness;
    long long search_bound; // min_degree is exhaustive only up to this coefficient bound
};
DegreeExtremes degree_extremes(const WindowLattice &B, long long search_bound);

WindowLattice intersect_kernel(const GroupSpec &g, const WindowLattice &B, const Functional &phi);

struct AscensionVerdict {
    enum class Kind { Strict, Equal, NotInvariant } kind;
    std::optional<FiberElement> element; // Strict: witness in B \ tauBtau^-1; NotInvariant: violator
};
AscensionVerdict ascension_type(const GroupSpec &g, const HnnElement &tau, const WindowLattice &B);

struct SelfEmbeddingResult {
    std::optional<std::pair<long long, long long>> witness; // (i, j) with s^i t^j B t^-j s^-i strictly inside B
    std::string note;
};
SelfEmbeddingResult self_embedding_search(const GroupSpec &g, const WindowLattice &B, long long i_lo,
                                          long long i_hi, long long j_lo, long long j_hi);

} // namespace solhnn
