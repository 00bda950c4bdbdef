#pragma once

/**
 * Telescoping identities for sums over order-2 C-finite sequences.
 *
 * A sequence s with s_{n+2} = u*s_n + v*s_{n+1} is modeled by alpha -> s_n,
 * beta -> s_{n+1}; the shift sigma corresponds to n -> n+1. When g solves
 * sigma(g) - g = f, the sum telescopes:
 *
 *   sum_{n=n0}^{m} f(s_n, s_{n+1}) = g(s_{m+1}, s_{m+2}) - g(s_{n0}, s_{n0+1}).
 *
 * Every emitted identity passes the exact substitution check and an exact
 * big-rational numeric check term by term; nothing unverified escapes.
 */

#include <optional>
#include <string>
#include <vector>

#include "bidiff/solver.hpp"

namespace bidiff {

struct Recurrence {
    Rat u;
    Rat v;
    Rat s0;
    Rat s1;
    long n0 = 0;  // first summation index
};

struct Identity {
    Recurrence recurrence;
    BiPoly summand;     // f, evaluated as f(s_n, s_{n+1})
    BiPoly telescoper;  // g with sigma(g) - g = f
    std::string closed_form;
    long verified_up_to = 0;
};

struct TelescopeResult {
    std::optional<Identity> identity;
    SupportSet support;
    std::vector<std::string> diagnostics;
};

// Solves sigma(g) - g = f over the field of the recurrence. On success the
// identity is numerically verified up to verify_terms; on failure the
// diagnostics name the obstruction (in particular any nonzero sigma-invariant
// part of a component of f).
TelescopeResult telescope_sum(const Recurrence& rec, const BiPoly& f, int cap = -1,
                              long verify_terms = 200);

// Exact check of the closed form for every m in [n0, M].
bool numeric_verify(const Identity& id, long M);

// First terms s_{n0}, s_{n0+1}, ..., s_{n0+count-1} of the recurrence
// (indices below 0 are not modeled; n0 must be >= 0).
std::vector<Rat> sequence_terms(const Recurrence& rec, long count);

}  // namespace bidiff
