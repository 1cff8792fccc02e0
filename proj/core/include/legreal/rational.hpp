#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <utility>

namespace legreal {

/// Exact rational scalar used throughout the geometry. Always canonical
/// (reduced, positive denominator), courtesy of GMP.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    mpz_class n(num), d(den);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline std::pair<std::string, std::string> rat_to_strings(const Rat& q) {
    return {q.get_num().get_str(), q.get_den().get_str()};
}

inline mpz_class rat_floor(const Rat& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline mpz_class rat_ceil(const Rat& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline int rat_sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Conservative double bounds: the true value always lies in [lo, hi].
inline std::pair<double, double> rat_double_bounds(const Rat& q) {
    double d = q.get_d();
    if (!std::isfinite(d)) {
        double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }
    return {std::nextafter(d, -std::numeric_limits<double>::infinity()),
            std::nextafter(d, std::numeric_limits<double>::infinity())};
}

/// Fixed-point decimal rendering (round half up), exact integer arithmetic.
/// Used for SVG output so that rendering is byte-deterministic.
inline std::string rat_to_decimal(const Rat& q, int digits) {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = q * Rat(scale);
    mpz_class twice_num = scaled.get_num() * 2 + scaled.get_den();
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), twice_num.get_mpz_t(), mpz_class(scaled.get_den() * 2).get_mpz_t());
    bool neg = n < 0;
    mpz_class a = abs(n);
    mpz_class ipart = a / scale, fpart = a % scale;
    std::string frac = fpart.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = (neg ? "-" : "") + ipart.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

} // namespace legreal
