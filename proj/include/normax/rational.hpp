#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace normax {

// All arithmetic on polytope data is exact. Rational is GMP-backed with
// expression templates disabled so that every operation yields a canonical
// (reduced, positive-denominator) value that can be compared with ==.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n) / Rational(d); }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational abs_val(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^e for integer e >= 0, exact.
inline Rational pow_int(const Rational& q, unsigned e) {
    Rational r(1), base(q);
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Integer pow_int(const Integer& z, unsigned e) {
    Integer r(1), base(z);
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

/// |q|^e * sign(q)  (odd-signed power used for dual normals).
inline Rational signed_pow(const Rational& q, unsigned e) {
    Rational r = pow_int(abs_val(q), e);
    return q < 0 ? Rational(-r) : r;
}

/// Largest integer r with r^p <= z. Requires z >= 0, p >= 1.
inline Integer floor_root(const Integer& z, unsigned p) {
    if (z < 0) throw std::domain_error("floor_root: negative argument");
    if (z == 0 || p == 1) return z;
    Integer lo(0), hi(1);
    while (pow_int(hi, p) <= z) hi <<= 1;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) >> 1;
        if (pow_int(mid, p) <= z) lo = mid; else hi = mid;
    }
    return lo;
}

/// Nearest multiple of `step` (step > 0), ties rounded up.
inline Rational round_to_grid(const Rational& x, const Rational& step) {
    // floor(x/step + 1/2) * step
    Rational t = x / step + Rational(1, 2);
    Integer fl = num(t) / den(t);
    if (t < 0 && fl * den(t) != num(t)) fl -= 1;
    return Rational(fl) * step;
}

/// Renders "num/den", or just "num" when den == 1.
inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

/// Always "num/den", the wire form used in JSON output.
inline std::string to_fraction_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

/// Parses an optionally signed integer or "num/den" literal.
inline Rational parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(tok));
        Integer n(tok.substr(0, slash)), d(tok.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + tok + "'");
    }
}

}  // namespace normax
