#include "solhnn/hnn.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace solhnn;
using testutil::random_element;

namespace {

const GroupSpec &abelian() {
    static GroupSpec g = GroupSpec::thm21();
    return g;
}
const GroupSpec &wreath() {
    static GroupSpec g = GroupSpec::baumslag_remeslennikov();
    return g;
}

// canonical form invariant: never both powers positive with w reducible
void check_canonical(const GroupSpec &g, const HnnElement &x) {
    CHECK(x.k >= 0);
    CHECK(x.l >= 0);
    if (x.k > 0 && x.l > 0)
        CHECK(!theta_preimage(g, x.w).has_value());
    if (base_is_identity(x.w))
        CHECK((x.k == 0 || x.l == 0));
}

} // namespace

TEST_CASE("worked normal forms") {
    const GroupSpec &g = abelian();
    // t^-1 u v t reduces: u v = theta(u^-1 v^3)
    HnnElement x = eval_word(g, parse_word("t^-1 u v t", g));
    CHECK(x.k == 0);
    CHECK(x.l == 0);
    CHECK(std::get<IntVector>(x.w) == IntVector{-1, 3});

    // t^-1 u t is already canonical: u has no theta preimage
    HnnElement y = eval_word(g, parse_word("t^-1 u t", g));
    CHECK(y.k == 1);
    CHECK(y.l == 1);
    CHECK(std::get<IntVector>(y.w) == IntVector{1, 0});

    // t u t^-1 = theta(u)
    HnnElement z = eval_word(g, parse_word("t u t^-1", g));
    CHECK(z.k == 0);
    CHECK(z.l == 0);
    CHECK(std::get<IntVector>(z.w) == IntVector{5, -1});
}

TEST_CASE("wreath relators collapse to the identity") {
    const GroupSpec &g = wreath();
    for (const char *w : {"t s t^-1 s^-1", "t a[0] t^-1 a[1]^-1 a[0]^-1", "s a[3] s^-1 a[4]^-1"})
        CHECK(hnn_is_identity(g, eval_word(g, parse_word(w, g))));
    CHECK(!hnn_is_identity(g, eval_word(g, parse_word("t a[0] t^-1 a[0]^-1", g))));
}

TEST_CASE("products stay canonical") {
    std::mt19937 rng(82);
    for (int i = 0; i < 300; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            HnnElement x = random_element(rng, g, 8);
            check_canonical(g, x);
            HnnElement y = random_element(rng, g, 8);
            check_canonical(g, mul(g, x, y));
            check_canonical(g, inv(g, x));
        }
    }
}

TEST_CASE("group axioms") {
    std::mt19937 rng(83);
    for (int i = 0; i < 250; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            HnnElement x = random_element(rng, g, 6);
            HnnElement y = random_element(rng, g, 6);
            HnnElement z = random_element(rng, g, 6);
            CHECK(hnn_eq(g, mul(g, mul(g, x, y), z), mul(g, x, mul(g, y, z))));
            CHECK(hnn_eq(g, mul(g, x, hnn_identity(g)), x));
            CHECK(hnn_is_identity(g, mul(g, x, inv(g, x))));
            CHECK(hnn_is_identity(g, mul(g, inv(g, x), x)));
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937 rng(84);
    for (int i = 0; i < 40; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            HnnElement x = random_element(rng, g, 5);
            HnnElement acc = hnn_identity(g);
            for (int n = 0; n <= 4; ++n) {
                CHECK(hnn_eq(g, pow(g, x, n), acc));
                CHECK(hnn_eq(g, pow(g, x, -n), inv(g, acc)));
                acc = mul(g, acc, x);
            }
        }
    }
}

TEST_CASE("chi is an additive homomorphism") {
    std::mt19937 rng(85);
    for (int i = 0; i < 200; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            HnnElement x = random_element(rng, g, 6);
            HnnElement y = random_element(rng, g, 6);
            CHECK(chi(mul(g, x, y)) == chi(x) + chi(y));
            CHECK(chi(inv(g, x)) == -chi(x));
        }
    }
    CHECK(chi(hnn_t(abelian())) == 1);
    CHECK(chi(hnn_base(abelian(), IntVector{3, -2})) == 0);
}

TEST_CASE("s exponent is an additive homomorphism on the wreath group") {
    const GroupSpec &g = wreath();
    std::mt19937 rng(86);
    for (int i = 0; i < 200; ++i) {
        HnnElement x = random_element(rng, g, 6);
        HnnElement y = random_element(rng, g, 6);
        CHECK(s_exponent(g, mul(g, x, y)) == s_exponent(g, x) + s_exponent(g, y));
    }
    CHECK(s_exponent(g, eval_word(g, parse_word("s^2 a t", g))) == 2);
    CHECK(s_exponent(g, hnn_t(g)) == 0);
    CHECK_THROWS(s_exponent(abelian(), hnn_t(abelian())));
}

TEST_CASE("conjugation by t agrees with explicit products") {
    std::mt19937 rng(87);
    for (int i = 0; i < 100; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            HnnElement x = random_element(rng, g, 6);
            for (long long j : {-2, -1, 0, 1, 3}) {
                HnnElement lhs = conj_by_t(g, x, j);
                HnnElement rhs = mul(g, mul(g, hnn_t(g, j), x), hnn_t(g, -j));
                CHECK(hnn_eq(g, lhs, rhs));
            }
        }
    }
}
