#include "solhnn/hnn.hpp"

namespace solhnn {

HnnElement hnn_identity(const GroupSpec &g) { return HnnElement{0, base_identity(g), 0}; }

HnnElement hnn_t(const GroupSpec &g, long long exponent) {
    if (exponent >= 0)
        return HnnElement{0, base_identity(g), exponent};
    return HnnElement{-exponent, base_identity(g), 0};
}

HnnElement hnn_base(const GroupSpec &g, BaseElement w) {
    check_tag(g, w);
    return HnnElement{0, std::move(w), 0};
}

HnnElement normalize(const GroupSpec &g, long long k, BaseElement w, long long l) {
    if (k < 0 || l < 0)
        throw std::invalid_argument("normalize: t-exponents must be nonnegative");
    check_tag(g, w);
    while (k > 0 && l > 0) {
        auto pre = theta_preimage(g, w);
        if (!pre)
            break;
        w = std::move(*pre);
        --k;
        --l;
    }
    return HnnElement{k, std::move(w), l};
}

HnnElement mul(const GroupSpec &g, const HnnElement &x, const HnnElement &y) {
    // t^-k w t^l * t^-k' w' t^l': fold the middle t^(l-k') into whichever
    // side keeps every intermediate exponent nonnegative
    long long e = x.l - y.k;
    if (e >= 0)
        return normalize(g, x.k, base_mul(g, x.w, theta_power(g, y.w, e)), e + y.l);
    return normalize(g, x.k - e, base_mul(g, theta_power(g, x.w, -e), y.w), y.l);
}

HnnElement inv(const GroupSpec &g, const HnnElement &x) {
    return normalize(g, x.l, base_inv(g, x.w), x.k);
}

HnnElement pow(const GroupSpec &g, const HnnElement &x, const Int &n) {
    HnnElement b = n < 0 ? inv(g, x) : x;
    Int m = abs_int(n);
    HnnElement r = hnn_identity(g);
    while (m > 0) {
        if (mod_floor(m, 2) == 1)
            r = mul(g, r, b);
        b = mul(g, b, b);
        m /= 2;
    }
    return r;
}

bool hnn_eq(const GroupSpec &g, const HnnElement &x, const HnnElement &y) {
    check_tag(g, x.w);
    check_tag(g, y.w);
    return x.k == y.k && x.l == y.l && x.w == y.w;
}

bool hnn_is_identity(const GroupSpec &g, const HnnElement &x) {
    return x.k == 0 && x.l == 0 && base_is_identity(x.w);
}

long long chi(const HnnElement &x) { return x.l - x.k; }

long long s_exponent(const GroupSpec &g, const HnnElement &x) {
    if (g.kind() != GroupSpec::Kind::Wreath)
        throw std::invalid_argument("s_exponent: group base is not a wreath product");
    return std::get<WreathElement>(x.w).shift;
}

HnnElement conj_by_t(const GroupSpec &g, const HnnElement &x, long long j) {
    return mul(g, mul(g, hnn_t(g, j), x), hnn_t(g, -j));
}

} // namespace solhnn
