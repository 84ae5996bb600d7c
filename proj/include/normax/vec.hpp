#pragma once

#include <vector>

#include "normax/rational.hpp"

namespace normax {

/// Exact point/direction in Q^d.
using RatVec = std::vector<Rational>;
using IntVec = std::vector<Integer>;

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec neg(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec scale(const Rational& s, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline bool is_zero(const RatVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline RatVec unit_vec(std::size_t d, std::size_t i, const Rational& v = Rational(1)) {
    RatVec r(d, Rational(0));
    r[i] = v;
    return r;
}

/// Sum of |x_i|^p -- the p-th power of the p-norm, exact for integer p >= 1.
inline Rational pnorm_pow(const RatVec& x, int p) {
    if (p < 1) throw std::domain_error("pnorm_pow: p must be >= 1");
    Rational s(0);
    for (const auto& xi : x) s += pow_int(abs_val(xi), static_cast<unsigned>(p));
    return s;
}

/// Scales to integer entries with content 1; zero vector stays zero.
inline IntVec primitive(const RatVec& a) {
    Integer l(1);
    for (const auto& x : a) l = lcm(l, den(x));
    IntVec v(a.size());
    Integer g(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        v[i] = num(a[i]) * (l / den(a[i]));
        g = gcd(g, v[i]);
    }
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

}  // namespace normax
