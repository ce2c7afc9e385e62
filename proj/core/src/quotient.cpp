#include "solhnn/quotient.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace solhnn {

namespace {

std::vector<Int> ring_mul(const std::vector<Int> &a, const std::vector<Int> &b, const Int &q, long long r) {
    std::vector<Int> c(static_cast<std::size_t>(r), 0);
    for (long long i = 0; i < r; ++i) {
        if (a[i] == 0)
            continue;
        for (long long j = 0; j < r; ++j) {
            long long k = (i + j) % r;
            c[k] = mod_floor(c[k] + a[i] * b[j], q);
        }
    }
    return c;
}

std::vector<Int> ring_one(long long r) {
    std::vector<Int> e(static_cast<std::size_t>(r), 0);
    e[0] = 1;
    return e;
}

std::vector<Int> flatten(const IntMatrix &m) {
    std::vector<Int> v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.push_back(m.at(i, j));
    return v;
}

IntMatrix unflatten(const std::vector<Int> &v, std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = v[i * n + j];
    return m;
}

Int ipow(const Int &b, long long e) {
    Int r = 1;
    for (long long i = 0; i < e; ++i)
        r *= b;
    return r;
}

} // namespace

CongruenceQuotient CongruenceQuotient::make(const GroupSpec &g, const Int &q, long long r) {
    if (q < 2)
        throw std::invalid_argument("make_quotient: modulus q >= 2 required");
    CongruenceQuotient Q(g, q, r);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        Int gc = boost::multiprecision::gcd(q, abs_int(g.abelian().det));
        if (gc != 1)
            throw std::invalid_argument("make_quotient: gcd(q, det M) = " + gc.str() +
                                        " != 1, theta is not invertible mod q");
        IntMatrix Mq = g.abelian().M.mod(q);
        IntMatrix id = IntMatrix::identity(g.rank());
        IntMatrix p = id;
        long long ord = 0;
        do {
            Q.t_pows_.push_back(flatten(p));
            p = (p * Mq).mod(q);
            ++ord;
        } while (!(p == id));
        Q.t_order_ = ord;
    } else {
        if (r < 1)
            throw std::invalid_argument("make_quotient: ring exponent r >= 1 required for the wreath base");
        if (mod_floor(q, 2) == 0)
            throw std::invalid_argument("make_quotient: q must be odd (x^r - 1 at -1 is -2, "
                                        "so 1+x is a unit only for odd q)");
        if (r % 2 == 0)
            throw std::invalid_argument("make_quotient: r must be odd (x^r - 1 at -1 is -2, "
                                        "so 1+x is a unit only for odd r)");
        Q.r_ = r;
        std::vector<Int> u(static_cast<std::size_t>(r), 0);
        u[0] = 1;
        if (r > 1)
            u[1] = 1;
        else
            u[0] = mod_floor(Int(2), q); // r = 1: 1+x collapses to 2
        std::vector<Int> p = ring_one(r);
        long long ord = 0;
        do {
            Q.t_pows_.push_back(p);
            p = ring_mul(p, u, q, r);
            ++ord;
        } while (p != ring_one(r));
        Q.t_order_ = ord;
    }
    return Q;
}

Int CongruenceQuotient::order() const {
    if (group_.kind() == GroupSpec::Kind::FreeAbelian)
        return ipow(q_, static_cast<long long>(group_.rank())) * t_order_;
    return ipow(q_, r_) * r_ * t_order_;
}

const std::vector<Int> &CongruenceQuotient::t_power_abelian(long long j) const {
    long long i = ((j % t_order_) + t_order_) % t_order_;
    return t_pows_[static_cast<std::size_t>(i)];
}

const std::vector<Int> &CongruenceQuotient::t_power_wreath(long long j) const {
    long long i = ((j % t_order_) + t_order_) % t_order_;
    return t_pows_[static_cast<std::size_t>(i)];
}

QuotientElement quotient_identity(const CongruenceQuotient &Q) {
    QuotientElement e;
    if (Q.group().kind() == GroupSpec::Kind::FreeAbelian)
        e.fiber.assign(Q.group().rank(), 0);
    else
        e.fiber.assign(static_cast<std::size_t>(Q.r()), 0);
    return e;
}

QuotientElement project(const GroupSpec &g, const CongruenceQuotient &Q, const HnnElement &x) {
    if (!(g == Q.group()))
        throw std::invalid_argument("project: element group does not match the quotient");
    QuotientElement e = quotient_identity(Q);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        // t^-k w t^l = theta^-k(w) t^(l-k) once theta is invertible
        const auto &w = std::get<IntVector>(x.w);
        IntMatrix P = unflatten(Q.t_power_abelian(-x.k), g.rank());
        IntVector v = P.apply(w);
        for (std::size_t i = 0; i < v.size(); ++i)
            e.fiber[i] = mod_floor(v[i], Q.q());
        e.t = ((x.l - x.k) % Q.t_order() + Q.t_order()) % Q.t_order();
        return e;
    }
    const auto &w = std::get<WreathElement>(x.w);
    std::vector<Int> a(static_cast<std::size_t>(Q.r()), 0);
    for (auto &[exp, c] : w.a.terms()) {
        long long i = ((exp % Q.r()) + Q.r()) % Q.r();
        a[static_cast<std::size_t>(i)] = mod_floor(a[static_cast<std::size_t>(i)] + c, Q.q());
    }
    e.fiber = ring_mul(a, Q.t_power_wreath(-x.k), Q.q(), Q.r());
    e.s = ((w.shift % Q.r()) + Q.r()) % Q.r();
    e.t = ((x.l - x.k) % Q.t_order() + Q.t_order()) % Q.t_order();
    return e;
}

QuotientElement quotient_mul(const CongruenceQuotient &Q, const QuotientElement &a, const QuotientElement &b) {
    QuotientElement e = quotient_identity(Q);
    const GroupSpec &g = Q.group();
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        IntMatrix P = unflatten(Q.t_power_abelian(a.t), g.rank());
        IntVector v = P.apply(b.fiber);
        for (std::size_t i = 0; i < v.size(); ++i)
            e.fiber[i] = mod_floor(a.fiber[i] + v[i], Q.q());
        e.t = (a.t + b.t) % Q.t_order();
        return e;
    }
    // (f, i, n)(f', i', n') = (f + x^i (1+x)^n f', i+i', n+n')
    std::vector<Int> scaled = ring_mul(b.fiber, Q.t_power_wreath(a.t), Q.q(), Q.r());
    std::vector<Int> shifted(static_cast<std::size_t>(Q.r()), 0);
    for (long long j = 0; j < Q.r(); ++j)
        shifted[static_cast<std::size_t>((j + a.s) % Q.r())] = scaled[static_cast<std::size_t>(j)];
    for (long long j = 0; j < Q.r(); ++j)
        e.fiber[static_cast<std::size_t>(j)] =
            mod_floor(a.fiber[static_cast<std::size_t>(j)] + shifted[static_cast<std::size_t>(j)], Q.q());
    e.s = (a.s + b.s) % Q.r();
    e.t = (a.t + b.t) % Q.t_order();
    return e;
}

ImageSubgroup image_subgroup(const GroupSpec &g, const CongruenceQuotient &Q, const WindowLattice &B) {
    std::size_t n = g.kind() == GroupSpec::Kind::FreeAbelian ? g.rank() : static_cast<std::size_t>(Q.r());
    std::vector<IntVector> gens;
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        IntMatrix inv_e = unflatten(Q.t_power_abelian(-B.denom_exp), n);
        for (auto &v : B.L.basis())
            gens.push_back(inv_e.apply(v));
    } else {
        std::vector<Int> inv_e = Q.t_power_wreath(-B.denom_exp);
        for (auto &p : B.poly_basis()) {
            std::vector<Int> a(n, 0);
            for (auto &[exp, c] : p.terms()) {
                long long i = ((exp % Q.r()) + Q.r()) % Q.r();
                a[static_cast<std::size_t>(i)] = mod_floor(a[static_cast<std::size_t>(i)] + c, Q.q());
            }
            gens.push_back(ring_mul(a, inv_e, Q.q(), Q.r()));
        }
    }
    // subgroup of (Z/q)^n generated by gens: HNF of the lifted lattice + qZ^n
    for (std::size_t i = 0; i < n; ++i) {
        IntVector qe(n, 0);
        qe[i] = Q.q();
        gens.push_back(std::move(qe));
    }
    Lattice L = hnf(n, gens);
    Int index = 1;
    for (auto &row : L.basis()) {
        std::size_t piv = 0;
        while (row[piv] == 0)
            ++piv;
        index *= row[piv];
    }
    ImageSubgroup out;
    out.order = ipow(Q.q(), static_cast<long long>(n)) / index;
    for (auto &row : L.basis()) {
        IntVector r(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = mod_floor(row[j], Q.q());
            nonzero = nonzero || r[j] != 0;
        }
        if (nonzero)
            out.generators.push_back(std::move(r));
    }
    return out;
}

BlassNeumannReport blass_neumann_check(const GroupSpec &g, const CongruenceQuotient &Q, const HnnElement &tau,
                                       const WindowLattice &B) {
    AscensionVerdict v = ascension_type(g, tau, B);
    if (v.kind == AscensionVerdict::Kind::Equal)
        throw std::invalid_argument("blass_neumann_check: conjugation by tau does not move B "
                                    "(ascension is not strict)");
    WindowLattice C = conj_lattice(g, tau, B);
    ImageSubgroup ib = image_subgroup(g, Q, B);
    ImageSubgroup ic = image_subgroup(g, Q, C);
    BlassNeumannReport rep;
    rep.order_b = ib.order;
    rep.order_conj = ic.order;
    rep.separated = ib.order != ic.order;
    rep.ascension = v.kind == AscensionVerdict::Kind::Strict ? "Strict" : "NotInvariant";
    return rep;
}

} // namespace solhnn
