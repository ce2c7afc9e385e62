#pragma once

#include "solhnn/base.hpp"

namespace solhnn {

// t^-k w t^l in Britton-irreducible (canonical) form: never k > 0 and l > 0
// with w in the image of theta.  Construct through normalize()/mul() only.
struct HnnElement {
    long long k = 0;
    BaseElement w;
    long long l = 0;
};

HnnElement hnn_identity(const GroupSpec &g);
HnnElement hnn_t(const GroupSpec &g, long long exponent = 1);
HnnElement hnn_base(const GroupSpec &g, BaseElement w);

HnnElement normalize(const GroupSpec &g, long long k, BaseElement w, long long l);
HnnElement mul(const GroupSpec &g, const HnnElement &x, const HnnElement &y);
HnnElement inv(const GroupSpec &g, const HnnElement &x);
HnnElement pow(const GroupSpec &g, const HnnElement &x, const Int &n);
bool hnn_eq(const GroupSpec &g, const HnnElement &x, const HnnElement &y);
bool hnn_is_identity(const GroupSpec &g, const HnnElement &x);

// chi(t) = 1, chi(B) = 0, so chi(t^-k w t^l) = l - k
long long chi(const HnnElement &x);

// exponent sum of s; wreath-base groups only
long long s_exponent(const GroupSpec &g, const HnnElement &x);

// t^j g t^-j
HnnElement conj_by_t(const GroupSpec &g, const HnnElement &x, long long j);

} // namespace solhnn
