#include "solhnn/words.hpp"

#include <cctype>
#include <sstream>

namespace solhnn {

namespace {

bool generator_allowed(char g, const GroupSpec &spec) {
    if (g == 't')
        return true;
    if (spec.kind() == GroupSpec::Kind::FreeAbelian)
        return g == 'u' || g == 'v';
    return g == 's' || g == 'a';
}

struct WordLexer {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    long long integer() {
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == digits)
            throw WordParseError(start + 1, std::string(s.substr(start, i - start)), "expected integer");
        return std::stoll(std::string(s.substr(start, i - start)));
    }
};

} // namespace

Word parse_word(std::string_view text, const GroupSpec &g) {
    WordLexer lx{text};
    Word w;
    bool expect_sep = false;
    while (!lx.eof()) {
        if (expect_sep && lx.s[lx.i] == '*') {
            ++lx.i;
            if (lx.eof())
                throw WordParseError(lx.i + 1, "", "trailing '*'");
        }
        std::size_t col = lx.i + 1;
        char c = lx.s[lx.i];
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw WordParseError(col, std::string(1, c), std::string("unexpected character '") + c + "'");
        if (!generator_allowed(c, g))
            throw WordParseError(col, std::string(1, c), std::string("unknown generator '") + c + "'");
        ++lx.i;
        WordAtom atom{c, 0, 1};
        if (c == 'a' && lx.i < lx.s.size() && lx.s[lx.i] == '[') {
            ++lx.i;
            atom.index = lx.integer();
            if (lx.i >= lx.s.size() || lx.s[lx.i] != ']')
                throw WordParseError(lx.i + 1, "", "expected ']'");
            ++lx.i;
        }
        if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
            ++lx.i;
            atom.exponent = lx.integer();
            if (atom.exponent == 0)
                throw WordParseError(col, std::string(1, c), "zero exponent");
        }
        w.atoms.push_back(atom);
        expect_sep = true;
    }
    return w;
}

HnnElement eval_word(const GroupSpec &g, const Word &w) {
    HnnElement acc = hnn_identity(g);
    for (const auto &atom : w.atoms) {
        HnnElement gen = hnn_identity(g);
        switch (atom.gen) {
        case 't':
            gen = hnn_t(g, 1);
            break;
        case 'u':
            gen = hnn_base(g, IntVector{1, 0});
            break;
        case 'v':
            gen = hnn_base(g, IntVector{0, 1});
            break;
        case 's':
            gen = hnn_base(g, WreathElement{LaurentPoly(), 1});
            break;
        case 'a':
            gen = hnn_base(g, wreath_generator(atom.index));
            break;
        default:
            throw std::logic_error("eval_word: bad generator");
        }
        acc = mul(g, acc, pow(g, gen, Int(atom.exponent)));
    }
    return acc;
}

Rep eval_word_rep(const GroupSpec &g, const Word &w) {
    Rep acc = rep_identity(g);
    for (const auto &atom : w.atoms) {
        Rep gen = rep_identity(g);
        switch (atom.gen) {
        case 't':
            gen = rep_t(g);
            break;
        case 'u':
            gen = rep_abelian_basis_vector(g, 0);
            break;
        case 'v':
            gen = rep_abelian_basis_vector(g, 1);
            break;
        case 's':
            gen = rep_s();
            break;
        case 'a':
            gen = rep_a(atom.index);
            break;
        default:
            throw std::logic_error("eval_word_rep: bad generator");
        }
        long long e = atom.exponent;
        Rep powed = gen;
        if (e < 0) {
            powed = rep_inverse(g, gen);
            e = -e;
        }
        Rep term = rep_identity(g);
        for (long long i = 0; i < e; ++i)
            term = rep_compose(g, term, powed);
        acc = rep_compose(g, acc, term);
    }
    return acc;
}

std::string format_element(const GroupSpec &g, const HnnElement &x) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string &token, long long e) {
        if (e == 0)
            return;
        if (!first)
            os << " * ";
        first = false;
        os << token;
        if (e != 1)
            os << "^" << e;
    };
    auto emit_int = [&](const std::string &token, const Int &e) {
        if (e == 0)
            return;
        if (!first)
            os << " * ";
        first = false;
        os << token;
        if (e != 1)
            os << "^" << e;
    };
    emit("t", -x.k);
    if (g.kind() == GroupSpec::Kind::FreeAbelian) {
        const auto &v = std::get<IntVector>(x.w);
        emit_int("u", v[0]);
        emit_int("v", v[1]);
    } else {
        const auto &we = std::get<WreathElement>(x.w);
        for (auto &[e, c] : we.a.terms())
            emit_int("a[" + std::to_string(e) + "]", c);
        emit("s", we.shift);
    }
    emit("t", x.l);
    return os.str();
}

IntVector parse_vector(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("vector must start with '('");
    ++i;
    IntVector v;
    while (true) {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("vector: expected integer at position " + std::to_string(start + 1));
        v.emplace_back(std::string(text.substr(start, i - start)));
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ')') {
            ++i;
            break;
        }
        throw std::invalid_argument("vector: expected ',' or ')' at position " + std::to_string(i + 1));
    }
    skip();
    if (i != text.size())
        throw std::invalid_argument("vector: trailing characters");
    return v;
}

std::string vector_str(const IntVector &v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace solhnn
