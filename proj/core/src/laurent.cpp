#include "solhnn/laurent.hpp"

#include <cctype>
#include <sstream>

namespace solhnn {

LaurentPoly LaurentPoly::pow(long long n) const {
    if (n < 0)
        throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly r = one();
    LaurentPoly b = *this;
    while (n > 0) {
        if (n & 1)
            r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[e, c] : coeffs_) {
        if (first) {
            if (e == 0)
                os << c;
            else
                os << c << "*x^" << e;
            first = false;
            continue;
        }
        Int a = c;
        if (a < 0) {
            os << " - ";
            a = -a;
        } else {
            os << " + ";
        }
        if (e == 0)
            os << a;
        else
            os << a << "*x^" << e;
    }
    return os.str();
}

namespace {

struct PolyLexer {
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
    char peek() {
        skip_ws();
        return s[i];
    }
    [[noreturn]] void fail(const std::string &what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i + 1) + ": " + what);
    }
    Int integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == digits)
            fail("expected integer");
        return Int(std::string(s.substr(start, i - start)));
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    PolyLexer lx{text};
    LaurentPoly p;
    bool first = true;
    while (!lx.eof()) {
        Int sign = 1;
        if (!first) {
            char op = lx.peek();
            if (op == '+')
                ++lx.i;
            else if (op == '-') {
                ++lx.i;
                sign = -1;
            } else
                lx.fail(std::string("expected '+' or '-', got '") + op + "'");
        }
        first = false;
        // term: int ['*' 'x' '^' int] | 'x' '^' int
        Int c = 1;
        long long e = 0;
        bool have_coeff = false;
        lx.skip_ws();
        if (lx.i < text.size() && (std::isdigit(static_cast<unsigned char>(text[lx.i])) || text[lx.i] == '+' || text[lx.i] == '-')) {
            c = lx.integer();
            have_coeff = true;
        }
        lx.skip_ws();
        if (lx.i < text.size() && (text[lx.i] == '*' || text[lx.i] == 'x')) {
            if (text[lx.i] == '*')
                ++lx.i;
            lx.skip_ws();
            if (lx.i >= text.size() || text[lx.i] != 'x')
                lx.fail("expected 'x'");
            ++lx.i;
            lx.skip_ws();
            if (lx.i < text.size() && text[lx.i] == '^') {
                ++lx.i;
                Int ei = lx.integer();
                e = static_cast<long long>(ei);
            } else {
                e = 1;
            }
        } else if (!have_coeff) {
            lx.fail("expected term");
        }
        p = p + monomial(sign * c, e);
    }
    return p;
}

} // namespace solhnn
