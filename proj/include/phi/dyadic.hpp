#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace phi {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational m * 2^e with m odd or zero; if m == 0 then e == 0.
// The normal form is unique, so equality of values is equality of fields.
struct Dyadic {
    BigInt m;
    int e = 0;

    Dyadic() = default;
    Dyadic(long long v) : m(v) { normalize(); }  // NOLINT: implicit on purpose
    Dyadic(BigInt mant, int exp) : m(std::move(mant)), e(exp) { normalize(); }

    bool is_zero() const { return m == 0; }

    void normalize() {
        if (m == 0) {
            e = 0;
            return;
        }
        BigInt a = abs(m);
        unsigned tz = boost::multiprecision::lsb(a);
        if (tz > 0) {
            a >>= tz;
            m = (m < 0) ? BigInt(-a) : a;
            e += static_cast<int>(tz);
        }
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.e == b.e && a.m == b.m; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.m, a.e); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.m == 0) return b;
        if (b.m == 0) return a;
        int e0 = std::min(a.e, b.e);
        BigInt s = (a.m << static_cast<unsigned>(a.e - e0)) +
                   (b.m << static_cast<unsigned>(b.e - e0));
        return Dyadic(std::move(s), e0);
    }

    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        if (a.m == 0 || b.m == 0) return Dyadic();
        return Dyadic(a.m * b.m, a.e + b.e);  // odd * odd stays odd
    }

    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    // value * 2^k
    Dyadic scaled_pow2(int k) const { return m == 0 ? Dyadic() : Dyadic(m, e + k); }
};

// Compares |a| with |b|; returns -1, 0, +1.
inline int cmp_abs(const Dyadic& a, const Dyadic& b) {
    if (a.m == 0 && b.m == 0) return 0;
    if (a.m == 0) return -1;
    if (b.m == 0) return 1;
    int e0 = std::min(a.e, b.e);
    BigInt A = abs(a.m) << static_cast<unsigned>(a.e - e0);
    BigInt B = abs(b.m) << static_cast<unsigned>(b.e - e0);
    if (A < B) return -1;
    if (B < A) return 1;
    return 0;
}

inline Dyadic pow(const Dyadic& base, unsigned k) {
    Dyadic r(1);
    Dyadic b = base;
    while (k) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

// "m/2^k" rendering; integers print plainly ("-3/2^6", "12", "0").
inline std::string to_pow2_string(const Dyadic& d) {
    if (d.e >= 0) return BigInt(d.m << static_cast<unsigned>(d.e)).str();
    return d.m.str() + "/2^" + std::to_string(-d.e);
}

// "m/denominator" rendering with the power of two expanded ("-3/64").
inline std::string to_fraction_string(const Dyadic& d) {
    if (d.e >= 0) return BigInt(d.m << static_cast<unsigned>(d.e)).str();
    return d.m.str() + "/" + BigInt(BigInt(1) << static_cast<unsigned>(-d.e)).str();
}

// Exact finite decimal expansion (every dyadic has one).
inline std::string to_decimal_string(const Dyadic& d) {
    if (d.e >= 0) return BigInt(d.m << static_cast<unsigned>(d.e)).str();
    unsigned k = static_cast<unsigned>(-d.e);
    BigInt digits = abs(d.m) * boost::multiprecision::pow(BigInt(5), k);
    std::string s = digits.str();
    if (s.size() <= k) s.insert(0, k + 1 - s.size(), '0');
    s.insert(s.size() - k, ".");
    if (d.m < 0) s.insert(0, "-");
    return s;
}

}  // namespace phi
