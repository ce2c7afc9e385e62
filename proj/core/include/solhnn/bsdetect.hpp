#pragma once

#include "solhnn/hnn.hpp"
#include "solhnn/matrix.hpp"

#include <optional>
#include <string>
#include <variant>

namespace solhnn {

// witness for a BS(1,m) relation inside HNN(Z^d, M): with x = a and y = t^n,
// y x y^-1 = x^m, i.e. M^n a = m a exactly
struct BsWitness {
    long long n;
    Int m;
    IntVector a; // primitive
};

// Exact eigenvalue certificate excluding every Baumslag-Solitar witness.
// If the characteristic polynomial x^2 - Tx + D is irreducible over Q and
// |T| > |D| + 1, then M^n a = m a with |m| >= 2 is impossible: lambda^n = m
// forces mu^n to be a nonzero integer dividing D^n, so 1 <= |mu| <= |D| and
// |T| = |lambda + mu| <= |D|/|mu| + |mu| <= |D| + 1.
struct ImpossibilityCertificate {
    Int trace;
    Int det;
    Int disc;      // trace^2 - 4 det, not a perfect square
    Int bound_lhs; // |trace|
    Int bound_rhs; // |det| + 1, with bound_lhs > bound_rhs
};

struct Inapplicable {
    std::string reason;
};

std::optional<BsWitness> bs_brute_search(const IntMatrix &M, long long n_max, const Int &m_max);

std::variant<ImpossibilityCertificate, Inapplicable> bs_certificate(const IntMatrix &M);

struct BsRelationResult {
    bool holds;
    std::string note;
};
BsRelationResult bs_relation_check(const GroupSpec &g, const HnnElement &x, const HnnElement &y, const Int &m);

} // namespace solhnn
