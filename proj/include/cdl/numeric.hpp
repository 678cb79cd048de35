#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdl {

using Int = mpz_class;
using Rat = mpq_class;

// [a]_+ = max(a,0)
inline long pos_part(long a) { return a > 0 ? a : 0; }
inline int sign_of(long a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = e > 0 ? e : -e;
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
    out.canonicalize();
    return out;
}

// generalized binomial coefficient binom(a, k) for rational a, integer k >= 0
inline Rat rat_binom(const Rat& a, unsigned long k) {
    Rat out(1);
    for (unsigned long i = 0; i < k; ++i) {
        out *= (a - Rat(static_cast<long>(i)));
        out /= Rat(static_cast<long>(i) + 1);
    }
    return out;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// lcm of positive rationals: lcm(a/b, c/d) = lcm(a,c)/gcd(b,d) for reduced inputs
inline Rat rat_lcm(const Rat& x, const Rat& y) {
    Rat out;
    out.get_num() = int_lcm(x.get_num(), y.get_num());
    out.get_den() = int_gcd(x.get_den(), y.get_den());
    out.canonicalize();
    return out;
}

}  // namespace cdl
