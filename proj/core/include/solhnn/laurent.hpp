#pragma once

#include "solhnn/numeric.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace solhnn {

// Sparse integer Laurent polynomial.  Invariant: no zero coefficients stored,
// so the empty map is the zero polynomial and support is always finite.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Int &c) {
        if (c != 0)
            coeffs_[0] = c;
    }

    static LaurentPoly monomial(const Int &c, long long e) {
        LaurentPoly p;
        if (c != 0)
            p.coeffs_[e] = c;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(Int(1)); }
    // 1 + x, the wreath endomorphism multiplier
    static LaurentPoly one_plus_x() {
        LaurentPoly p;
        p.coeffs_[0] = 1;
        p.coeffs_[1] = 1;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long long, Int> &terms() const { return coeffs_; }

    Int coeff(long long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    long long min_exp() const {
        if (is_zero())
            throw std::domain_error("min_exp of zero polynomial");
        return coeffs_.begin()->first;
    }
    long long max_exp() const {
        if (is_zero())
            throw std::domain_error("max_exp of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    // support width d(a); undefined for zero
    long long degree() const {
        if (is_zero())
            throw std::domain_error("degree undefined for the zero polynomial");
        return max_exp() - min_exp();
    }

    LaurentPoly shifted(long long e) const {
        LaurentPoly r;
        for (auto &[k, c] : coeffs_)
            r.coeffs_[k + e] = c;
        return r;
    }

    Int eval_at_minus_one() const {
        Int s = 0;
        for (auto &[e, c] : coeffs_)
            s += (e % 2 == 0) ? c : Int(-c);
        return s;
    }

    // exact quotient by (1+x); succeeds iff eval_at_minus_one() == 0
    std::optional<LaurentPoly> div_one_plus_x() const {
        if (is_zero())
            return LaurentPoly();
        LaurentPoly q;
        Int carry = 0; // quotient coefficient at exponent i-1
        long long lo = min_exp(), hi = max_exp();
        for (long long i = lo; i <= hi; ++i) {
            Int d = coeff(i) - carry;
            if (d != 0)
                q.coeffs_[i] = d;
            carry = d;
        }
        if (carry != 0)
            return std::nullopt; // remainder
        return q;
    }

    friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
        LaurentPoly r = a;
        for (auto &[e, c] : b.coeffs_) {
            Int s = r.coeff(e) + c;
            if (s == 0)
                r.coeffs_.erase(e);
            else
                r.coeffs_[e] = s;
        }
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly &a) {
        LaurentPoly r;
        for (auto &[e, c] : a.coeffs_)
            r.coeffs_[e] = -c;
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
        LaurentPoly r;
        for (auto &[ea, ca] : a.coeffs_)
            for (auto &[eb, cb] : b.coeffs_) {
                long long e = ea + eb;
                Int s = r.coeff(e) + ca * cb;
                if (s == 0)
                    r.coeffs_.erase(e);
                else
                    r.coeffs_[e] = s;
            }
        return r;
    }
    friend LaurentPoly operator*(const Int &c, const LaurentPoly &a) {
        LaurentPoly r;
        if (c == 0)
            return r;
        for (auto &[e, k] : a.coeffs_)
            r.coeffs_[e] = c * k;
        return r;
    }
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }
    friend bool operator<(const LaurentPoly &a, const LaurentPoly &b) { return a.coeffs_ < b.coeffs_; }

    LaurentPoly pow(long long n) const; // n >= 0

    // canonical text: terms by ascending exponent, `c` for exponent 0,
    // `c*x^e` otherwise, e.g. "1 + 2*x^1 + 1*x^2", "-1*x^-3"
    std::string str() const;
    static LaurentPoly parse(std::string_view text);

  private:
    std::map<long long, Int> coeffs_;
};

inline LaurentPoly mul_one_plus_x_pow(const LaurentPoly &p, long long k) {
    LaurentPoly r = p;
    LaurentPoly u = LaurentPoly::one_plus_x();
    for (long long i = 0; i < k; ++i)
        r = r * u;
    return r;
}

} // namespace solhnn
