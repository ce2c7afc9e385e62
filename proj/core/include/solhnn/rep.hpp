#pragma once

#include "solhnn/hnn.hpp"

#include <variant>
#include <vector>

namespace solhnn {

// Dilation representation of the free-abelian-base group: a pair (v, n)
// with v a rational vector whose denominators divide a power of det(M),
// acting as v + M^n * (.).  Composition: (v,n)(w,n') = (v + M^n w, n+n').
struct DilationRep {
    std::vector<Rat> v;
    long long n = 0;
    friend bool operator==(const DilationRep &a, const DilationRep &b) { return a.n == b.n && a.v == b.v; }
};

// Representation of the Baumslag-Remeslennikov group over Z[x, x^-1, (1+x)^-1]:
// (num/(1+x)^denom_exp, s_exp, t_exp) in lowest terms, composing by
// (f,i,n)(f',i',n') = (f + x^i (1+x)^n f', i+i', n+n').
struct BRRep {
    LaurentPoly num;
    long long denom_exp = 0; // num not divisible by 1+x unless denom_exp == 0
    long long s_exp = 0;
    long long t_exp = 0;
    friend bool operator==(const BRRep &a, const BRRep &b) {
        return a.denom_exp == b.denom_exp && a.s_exp == b.s_exp && a.t_exp == b.t_exp && a.num == b.num;
    }
};

using Rep = std::variant<DilationRep, BRRep>;

Rep rep_identity(const GroupSpec &g);
Rep embed(const GroupSpec &g, const HnnElement &x);
Rep rep_compose(const GroupSpec &g, const Rep &a, const Rep &b);
Rep rep_inverse(const GroupSpec &g, const Rep &a);
bool rep_eq(const Rep &a, const Rep &b);

// generator images used by the word oracle: t, and base generators
Rep rep_t(const GroupSpec &g);
Rep rep_abelian_basis_vector(const GroupSpec &g, std::size_t index);
Rep rep_s();
Rep rep_a(long long index);

} // namespace solhnn
