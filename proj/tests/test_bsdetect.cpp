#include "solhnn/bsdetect.hpp"
#include "solhnn/words.hpp"

#include <doctest.h>

#include <random>

using namespace solhnn;

namespace {

IntMatrix mat2(long long a, long long b, long long c, long long d) {
    IntMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

} // namespace

TEST_CASE("certificate for the trace-5 determinant-2 matrix") {
    auto cert = bs_certificate(mat2(5, 2, -1, 0));
    auto *ok = std::get_if<ImpossibilityCertificate>(&cert);
    REQUIRE(ok != nullptr);
    CHECK(ok->trace == 5);
    CHECK(ok->det == 2);
    CHECK(ok->disc == 17);
    CHECK(ok->bound_lhs == 5);
    CHECK(ok->bound_rhs == 3);
    CHECK(ok->bound_lhs > ok->bound_rhs);
}

TEST_CASE("certificate refuses reducible or small-trace matrices") {
    // disc = 1 is a perfect square
    auto c1 = bs_certificate(mat2(2, 0, 0, 3));
    CHECK(std::holds_alternative<Inapplicable>(c1));
    // disc = 12 not square, but |T| = 2 <= |D| + 1 = 3
    auto c2 = bs_certificate(mat2(1, 3, 1, 1));
    CHECK(std::holds_alternative<Inapplicable>(c2));
    CHECK_THROWS(bs_certificate(mat2(1, 0, 0, 1)));
}

TEST_CASE("brute search outcomes on worked matrices") {
    CHECK(!bs_brute_search(mat2(5, 2, -1, 0), 8, 64).has_value());

    auto w = bs_brute_search(mat2(2, 0, 0, 3), 4, 32);
    REQUIRE(w.has_value());
    CHECK(w->n == 1);
    CHECK(w->m == 2);
    CHECK(w->a == IntVector{1, 0});

    // eigenvalue only appears at a power: [[0,2],[1,0]]^2 = 2I
    auto w2 = bs_brute_search(mat2(0, 2, 1, 0), 4, 32);
    REQUIRE(w2.has_value());
    CHECK(w2->n == 2);
    CHECK(w2->m == 2);
}

TEST_CASE("search witnesses verify exactly and certificates exclude them") {
    std::mt19937 rng(112);
    std::uniform_int_distribution<long long> c(-5, 5);
    int tried = 0;
    while (tried < 50) {
        IntMatrix m = mat2(c(rng), c(rng), c(rng), c(rng));
        Int d = m.det();
        if (abs_int(d) < 2 || abs_int(d) > 9)
            continue;
        ++tried;
        auto cert = bs_certificate(m);
        auto w = bs_brute_search(m, 6, 32);
        if (std::holds_alternative<ImpossibilityCertificate>(cert))
            CHECK(!w.has_value());
        if (w) {
            long long n = w->n < 0 ? -w->n : w->n;
            IntMatrix p = m.pow(n);
            if (w->n > 0) {
                IntVector img = p.apply(w->a);
                for (std::size_t i = 0; i < 2; ++i)
                    CHECK(img[i] == w->m * w->a[i]);
            } else {
                // theta^n a = a^m reads m * M^|n| a = a
                IntVector img = p.apply(w->a);
                for (std::size_t i = 0; i < 2; ++i)
                    CHECK(w->m * img[i] == w->a[i]);
            }
        }
    }
}

TEST_CASE("relation check confirms a found witness in the group") {
    GroupSpec g = GroupSpec::free_abelian(mat2(2, 0, 0, 3));
    HnnElement x = eval_word(g, parse_word("u", g));
    HnnElement y = hnn_t(g);
    BsRelationResult r = bs_relation_check(g, x, y, 2);
    CHECK(r.holds);
    CHECK(!bs_relation_check(g, x, y, 3).holds);

    GroupSpec h = GroupSpec::thm21();
    CHECK(!bs_relation_check(h, eval_word(h, parse_word("u", h)), hnn_t(h), 2).holds);

    BsRelationResult ident = bs_relation_check(h, hnn_identity(h), hnn_t(h), 2);
    CHECK(!ident.holds);
    CHECK(!ident.note.empty());
}

TEST_CASE("search handles larger ambient dimension") {
    IntMatrix m(3, 3);
    m.at(0, 0) = 2;
    m.at(1, 1) = 5;
    m.at(1, 2) = 1;
    m.at(2, 1) = -1;
    m.at(2, 2) = 0;
    // block diag(2, trace-5 block): only the first axis gives a witness
    auto w = bs_brute_search(m, 4, 32);
    REQUIRE(w.has_value());
    CHECK(w->n == 1);
    CHECK(w->m == 2);
    CHECK(w->a == IntVector{1, 0, 0});
}
