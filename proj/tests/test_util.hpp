#pragma once

#include "solhnn/words.hpp"

#include <random>
#include <string>

namespace solhnn::testutil {

// random word over the group's alphabet with exponents in [-3,3] \ {0}
inline std::string random_word(std::mt19937 &rng, const GroupSpec &g, int len) {
    static const char *abelian[] = {"t", "u", "v"};
    static const char *wreath[] = {"t", "s", "a", "a[1]", "a[-1]", "a[2]"};
    std::uniform_int_distribution<int> exp(-3, 3);
    std::string w;
    for (int i = 0; i < len; ++i) {
        int e = exp(rng);
        if (e == 0)
            e = 1;
        const char *gen = g.kind() == GroupSpec::Kind::FreeAbelian ? abelian[rng() % 3] : wreath[rng() % 6];
        if (!w.empty())
            w += " * ";
        w += gen;
        if (e != 1)
            w += "^" + std::to_string(e);
    }
    return w;
}

inline HnnElement random_element(std::mt19937 &rng, const GroupSpec &g, int len) {
    return eval_word(g, parse_word(random_word(rng, g, len), g));
}

} // namespace solhnn::testutil
