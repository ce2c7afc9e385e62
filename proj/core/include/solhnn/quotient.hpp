#pragma once

#include "solhnn/hnn.hpp"
#include "solhnn/subgroup.hpp"

#include <vector>

namespace solhnn {

// Congruence finite quotient in which theta becomes invertible, closing the
// ascending HNN relation into a semidirect product by a finite cyclic group.
//   abelian base:  fiber (Z/q)^rank with gcd(q, det M) = 1,
//                  t acts as M mod q with multiplicative order t_order
//   wreath base:   fiber (Z/q)[x]/(x^r - 1) with q, r odd, s acts as x,
//                  t acts as 1+x (a unit: x^r - 1 at -1 is -2)
class CongruenceQuotient {
  public:
    static CongruenceQuotient make(const GroupSpec &g, const Int &q, long long r = 0);

    const GroupSpec &group() const { return group_; }
    const Int &q() const { return q_; }
    long long r() const { return r_; }
    long long t_order() const { return t_order_; }
    Int order() const;

    // t-action power with signed exponent, via the cached cycle
    const std::vector<Int> &t_power_abelian(long long j) const; // flattened rank x rank
    const std::vector<Int> &t_power_wreath(long long j) const;  // ring element, length r

  private:
    CongruenceQuotient(GroupSpec g, Int q, long long r) : group_(std::move(g)), q_(std::move(q)), r_(r) {}
    GroupSpec group_;
    Int q_;
    long long r_;
    long long t_order_ = 0;
    std::vector<std::vector<Int>> t_pows_; // index j in [0, t_order)
};

struct QuotientElement {
    std::vector<Int> fiber; // vector mod q, or ring element coefficients
    long long s = 0;        // mod r, wreath only
    long long t = 0;        // mod t_order
    friend bool operator==(const QuotientElement &a, const QuotientElement &b) {
        return a.fiber == b.fiber && a.s == b.s && a.t == b.t;
    }
};

QuotientElement project(const GroupSpec &g, const CongruenceQuotient &Q, const HnnElement &x);
QuotientElement quotient_mul(const CongruenceQuotient &Q, const QuotientElement &a, const QuotientElement &b);
QuotientElement quotient_identity(const CongruenceQuotient &Q);

struct ImageSubgroup {
    Int order;
    std::vector<IntVector> generators; // canonical HNF basis mod q
};
ImageSubgroup image_subgroup(const GroupSpec &g, const CongruenceQuotient &Q, const WindowLattice &B);

struct BlassNeumannReport {
    bool separated; // image subgroups of B and tau B tau^-1 differ
    Int order_b;
    Int order_conj;
    std::string ascension; // Strict or NotInvariant
};
BlassNeumannReport blass_neumann_check(const GroupSpec &g, const CongruenceQuotient &Q, const HnnElement &tau,
                                       const WindowLattice &B);

} // namespace solhnn
