#pragma once

#include <gmpxx.h>

#include <string>

namespace symgen {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer &num, const Integer &den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational &r) { return r.get_den() == 1; }

inline std::string to_string(const Rational &r) { return r.get_str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

// Coefficient-ring hooks for Rational, mirrored by LaurentPoly.
inline Rational zero_like(const Rational &) { return Rational(0); }
inline Rational one_like(const Rational &) { return Rational(1); }
inline bool is_zero(const Rational &r) { return sgn(r) == 0; }

} // namespace symgen
