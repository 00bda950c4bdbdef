#pragma once

/**
 * Exact arbitrary-precision integers and rationals.
 *
 * Rat is GMP's mpq_class: always canonical (reduced, positive denominator),
 * arithmetic is exact. Helpers below cover the few operations GMP does not
 * spell out directly: string parsing with validation, perfect-square
 * detection, integer powers, and floor/ceil onto a dyadic grid.
 */

#include <gmpxx.h>

#include <optional>
#include <string>

#include "bidiff/errors.hpp"

namespace bidiff {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" with optional sign. Throws ParseError on junk.
Rat rat_from_string(const std::string& text);

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// If r is the square of a rational, returns its nonnegative square root.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

// r^e for any integer e (e < 0 inverts; 0^negative throws).
Rat rat_pow(const Rat& r, long e);

// Largest multiple of 2^-k that is <= r (resp. smallest >= r).
Rat dyadic_floor(const Rat& r, unsigned k);
Rat dyadic_ceil(const Rat& r, unsigned k);

// Canonical rendering: "p" or "p/q".
std::string rat_to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace bidiff
