#pragma once

// Exact rational scalars. Thin helpers over GMP's mpq_class: canonical
// string form "p/q" in lowest terms, exact q-th roots in Q, and the
// generalized binomial coefficient used by fractional-power expansions.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qord {

using Rat = mpq_class;
using Int = mpz_class;

// gmpxx has no long long overloads; long is 64-bit on this target.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }
inline Rat rat_of(long long num, long long den) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" (optional leading '-'); canonicalizes to lowest
// terms with positive denominator. Throws InputError on bad syntax or
// zero denominator.
Rat parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q", lowest terms.
std::string rational_to_string(const Rat& value);

// Exact q-th root in Q when one exists (q >= 1). For even q the
// nonnegative root is returned; negative radicands with even q yield
// nullopt.
std::optional<Rat> exact_root(const Rat& value, long long q);

// value^e for integer e (negative allowed; value must be nonzero then).
Rat rat_pow(const Rat& value, long long e);

// Generalized binomial coefficient (alpha choose k), alpha rational.
Rat binomial(const Rat& alpha, long long k);

}  // namespace qord
