#include "solhnn/rep.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace solhnn;
using testutil::random_word;

namespace {

const GroupSpec &abelian() {
    static GroupSpec g = GroupSpec::thm21();
    return g;
}
const GroupSpec &wreath() {
    static GroupSpec g = GroupSpec::baumslag_remeslennikov();
    return g;
}

} // namespace

TEST_CASE("embed is a homomorphism") {
    std::mt19937 rng(92);
    for (int i = 0; i < 200; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            HnnElement x = testutil::random_element(rng, g, 6);
            HnnElement y = testutil::random_element(rng, g, 6);
            Rep lhs = embed(g, mul(g, x, y));
            Rep rhs = rep_compose(g, embed(g, x), embed(g, y));
            CHECK(rep_eq(lhs, rhs));
        }
    }
}

TEST_CASE("representation inverses compose to the identity") {
    std::mt19937 rng(93);
    for (int i = 0; i < 150; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            Rep r = eval_word_rep(g, parse_word(random_word(rng, g, 8), g));
            CHECK(rep_eq(rep_compose(g, r, rep_inverse(g, r)), rep_identity(g)));
            CHECK(rep_eq(rep_compose(g, rep_inverse(g, r), r), rep_identity(g)));
        }
    }
}

TEST_CASE("word evaluation through the representation matches embedding") {
    std::mt19937 rng(94);
    for (int i = 0; i < 200; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            Word w = parse_word(random_word(rng, g, 10), g);
            CHECK(rep_eq(eval_word_rep(g, w), embed(g, eval_word(g, w))));
        }
    }
}

TEST_CASE("representation separates inequal canonical forms") {
    std::mt19937 rng(95);
    int unequal_seen = 0;
    for (int i = 0; i < 300; ++i) {
        for (const GroupSpec *gp : {&abelian(), &wreath()}) {
            const GroupSpec &g = *gp;
            Word w1 = parse_word(random_word(rng, g, 8), g);
            Word w2 = parse_word(random_word(rng, g, 8), g);
            bool canon = hnn_eq(g, eval_word(g, w1), eval_word(g, w2));
            bool rep = rep_eq(eval_word_rep(g, w1), eval_word_rep(g, w2));
            CHECK(canon == rep);
            if (!canon)
                ++unequal_seen;
        }
    }
    CHECK(unequal_seen > 0);
}

TEST_CASE("BR representation keeps lowest terms") {
    const GroupSpec &g = wreath();
    std::mt19937 rng(96);
    for (int i = 0; i < 150; ++i) {
        Rep r = eval_word_rep(g, parse_word(random_word(rng, g, 10), g));
        const auto &br = std::get<BRRep>(r);
        CHECK(br.denom_exp >= 0);
        if (br.denom_exp > 0)
            CHECK(br.num.eval_at_minus_one() != 0);
    }
}

TEST_CASE("dilation of t is the matrix action") {
    const GroupSpec &g = abelian();
    // t u t^-1 embeds as translation by M e_1 = (5,-1)
    Rep r = eval_word_rep(g, parse_word("t u t^-1", g));
    const auto &d = std::get<DilationRep>(r);
    CHECK(d.n == 0);
    CHECK(d.v == std::vector<Rat>{Rat(5), Rat(-1)});
    // t^-1 v t translates by M^-1 e_2 = (1, -5/2)... i.e. has a denominator
    Rep r2 = eval_word_rep(g, parse_word("t^-1 u t", g));
    const auto &d2 = std::get<DilationRep>(r2);
    CHECK(d2.n == 0);
    CHECK(denominator(d2.v[1]) != 1);
}
