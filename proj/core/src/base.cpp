#include "solhnn/base.hpp"

namespace solhnn {

void check_tag(const GroupSpec &g, const BaseElement &x) {
    bool abelian = std::holds_alternative<IntVector>(x);
    if (abelian != (g.kind() == GroupSpec::Kind::FreeAbelian))
        throw std::invalid_argument("base element does not belong to this group");
    if (abelian && std::get<IntVector>(x).size() != g.rank())
        throw std::invalid_argument("base element has wrong rank");
}

BaseElement base_identity(const GroupSpec &g) {
    if (g.kind() == GroupSpec::Kind::FreeAbelian)
        return IntVector(g.rank(), 0);
    return WreathElement{};
}

bool base_is_identity(const BaseElement &w) {
    if (auto *v = std::get_if<IntVector>(&w)) {
        for (auto &x : *v)
            if (x != 0)
                return false;
        return true;
    }
    const auto &we = std::get<WreathElement>(w);
    return we.shift == 0 && we.a.is_zero();
}

BaseElement base_mul(const GroupSpec &g, const BaseElement &x, const BaseElement &y) {
    check_tag(g, x);
    check_tag(g, y);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        const auto &a = std::get<IntVector>(x);
        const auto &b = std::get<IntVector>(y);
        IntVector r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = a[i] + b[i];
        return r;
    }
    // (a, i) * (b, j) = (a + x^i b, i + j): s a_k s^-1 = a_{k+1}
    const auto &a = std::get<WreathElement>(x);
    const auto &b = std::get<WreathElement>(y);
    return WreathElement{a.a + b.a.shifted(a.shift), a.shift + b.shift};
}

BaseElement base_inv(const GroupSpec &g, const BaseElement &x) {
    check_tag(g, x);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        IntVector r = std::get<IntVector>(x);
        for (auto &c : r)
            c = -c;
        return r;
    }
    const auto &a = std::get<WreathElement>(x);
    return WreathElement{(-a.a).shifted(-a.shift), -a.shift};
}

BaseElement theta_apply(const GroupSpec &g, const BaseElement &x) {
    check_tag(g, x);
    if (g.kind() == GroupSpec::Kind::FreeAbelian)
        return g.abelian().M.apply(std::get<IntVector>(x));
    const auto &a = std::get<WreathElement>(x);
    return WreathElement{a.a * LaurentPoly::one_plus_x(), a.shift};
}

std::optional<BaseElement> theta_preimage(const GroupSpec &g, const BaseElement &x) {
    check_tag(g, x);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        auto h = solve_integral(g.abelian().M, std::get<IntVector>(x));
        if (!h)
            return std::nullopt;
        return BaseElement(*h);
    }
    const auto &a = std::get<WreathElement>(x);
    auto q = a.a.div_one_plus_x();
    if (!q)
        return std::nullopt;
    return BaseElement(WreathElement{*q, a.shift});
}

BaseElement theta_power(const GroupSpec &g, const BaseElement &x, long long n) {
    if (n < 0)
        throw std::invalid_argument("theta_power: negative exponent");
    if (g.kind() == GroupSpec::Kind::FreeAbelian)
        return g.abelian().M.pow(n).apply(std::get<IntVector>(x));
    const auto &a = std::get<WreathElement>(x);
    return WreathElement{a.a * LaurentPoly::one_plus_x().pow(n), a.shift};
}

WreathElement wreath_generator(long long index) {
    return WreathElement{LaurentPoly::monomial(1, index), 0};
}

} // namespace solhnn
