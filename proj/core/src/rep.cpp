#include "solhnn/rep.hpp"

namespace solhnn {

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

RatMatrix rat_mul(const RatMatrix &a, const RatMatrix &b) {
    std::size_t n = a.size();
    RatMatrix r(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] += a[i][k] * b[k][j];
    return r;
}

RatMatrix rat_inverse(const IntMatrix &m) {
    std::size_t n = m.rows();
    RatMatrix a(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("rat_inverse: singular matrix");
        std::swap(a[c], a[p]);
        Rat piv = a[c][c];
        for (auto &x : a[c])
            x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    RatMatrix inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

// M^n for signed n
RatMatrix rat_power(const GroupSpec &g, long long n) {
    std::size_t d = g.rank();
    RatMatrix base;
    if (n >= 0) {
        base.assign(d, std::vector<Rat>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                base[i][j] = Rat(g.abelian().M.at(i, j));
    } else {
        base = rat_inverse(g.abelian().M);
        n = -n;
    }
    RatMatrix r = rat_identity(d);
    while (n > 0) {
        if (n & 1)
            r = rat_mul(r, base);
        base = rat_mul(base, base);
        n >>= 1;
    }
    return r;
}

std::vector<Rat> rat_apply(const RatMatrix &m, const std::vector<Rat> &v) {
    std::vector<Rat> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

// restore the lowest-terms invariant on a BRRep
BRRep br_reduce(BRRep r) {
    if (r.num.is_zero()) {
        r.denom_exp = 0;
        return r;
    }
    while (r.denom_exp > 0) {
        auto q = r.num.div_one_plus_x();
        if (!q)
            break;
        r.num = std::move(*q);
        --r.denom_exp;
    }
    return r;
}

// x^shift * (1+x)^tpow * f, as an exact (num, denom_exp) pair
BRRep br_scale(const BRRep &f, long long shift, long long tpow) {
    BRRep r;
    r.num = f.num.shifted(shift);
    long long e = f.denom_exp - tpow;
    if (e < 0) {
        r.num = mul_one_plus_x_pow(r.num, -e);
        e = 0;
    }
    r.denom_exp = e;
    return br_reduce(std::move(r));
}

BRRep br_compose(const BRRep &a, const BRRep &b) {
    BRRep sb = br_scale(b, a.s_exp, a.t_exp);
    long long e = std::max(a.denom_exp, sb.denom_exp);
    LaurentPoly num = mul_one_plus_x_pow(a.num, e - a.denom_exp) + mul_one_plus_x_pow(sb.num, e - sb.denom_exp);
    BRRep r{std::move(num), e, a.s_exp + b.s_exp, a.t_exp + b.t_exp};
    return br_reduce(std::move(r));
}

} // namespace

Rep rep_identity(const GroupSpec &g) {
    if (g.kind() == GroupSpec::Kind::FreeAbelian)
        return DilationRep{std::vector<Rat>(g.rank()), 0};
    return BRRep{};
}

Rep rep_t(const GroupSpec &g) {
    if (g.kind() == GroupSpec::Kind::FreeAbelian)
        return DilationRep{std::vector<Rat>(g.rank()), 1};
    return BRRep{LaurentPoly(), 0, 0, 1};
}

Rep rep_abelian_basis_vector(const GroupSpec &g, std::size_t index) {
    std::vector<Rat> v(g.rank());
    v.at(index) = 1;
    return DilationRep{std::move(v), 0};
}

Rep rep_s() { return BRRep{LaurentPoly(), 0, 1, 0}; }

Rep rep_a(long long index) { return BRRep{LaurentPoly::monomial(1, index), 0, 0, 0}; }

Rep rep_compose(const GroupSpec &g, const Rep &a, const Rep &b) {
    if (a.index() != b.index())
        throw std::invalid_argument("rep_compose: representation kind mismatch");
    if (auto *x = std::get_if<DilationRep>(&a)) {
        const auto &y = std::get<DilationRep>(b);
        RatMatrix mn = rat_power(g, x->n);
        std::vector<Rat> v = rat_apply(mn, y.v);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += x->v[i];
        return DilationRep{std::move(v), x->n + y.n};
    }
    return br_compose(std::get<BRRep>(a), std::get<BRRep>(b));
}

Rep rep_inverse(const GroupSpec &g, const Rep &a) {
    if (auto *x = std::get_if<DilationRep>(&a)) {
        RatMatrix mn = rat_power(g, -x->n);
        std::vector<Rat> v = rat_apply(mn, x->v);
        for (auto &c : v)
            c = -c;
        return DilationRep{std::move(v), -x->n};
    }
    const auto &x = std::get<BRRep>(a);
    BRRep neg{-x.num, x.denom_exp, 0, 0};
    BRRep r = br_scale(neg, -x.s_exp, -x.t_exp);
    r.s_exp = -x.s_exp;
    r.t_exp = -x.t_exp;
    return r;
}

bool rep_eq(const Rep &a, const Rep &b) {
    if (a.index() != b.index())
        throw std::invalid_argument("rep_eq: representation kind mismatch");
    return a == b;
}

Rep embed(const GroupSpec &g, const HnnElement &x) {
    check_tag(g, x.w);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        const auto &w = std::get<IntVector>(x.w);
        std::vector<Rat> v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            v[i] = Rat(w[i]);
        Rep base = DilationRep{std::move(v), 0};
        Rep tk = DilationRep{std::vector<Rat>(g.rank()), -x.k};
        Rep tl = DilationRep{std::vector<Rat>(g.rank()), x.l};
        return rep_compose(g, rep_compose(g, tk, base), tl);
    }
    const auto &w = std::get<WreathElement>(x.w);
    Rep base = BRRep{w.a, 0, w.shift, 0};
    Rep tk = BRRep{LaurentPoly(), 0, 0, -x.k};
    Rep tl = BRRep{LaurentPoly(), 0, 0, x.l};
    return rep_compose(g, rep_compose(g, tk, base), tl);
}

} // namespace solhnn
