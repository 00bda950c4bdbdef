#pragma once

/**
 * The difference-field context built from the shift sigma(alpha) = beta,
 * sigma(beta) = u*alpha + v*beta.
 *
 * The companion matrix A = ((0, u), (1, v)) has characteristic polynomial
 * x^2 - v*x - u with discriminant D = v^2 + 4u and eigenvalues
 * lambda_{1,2} = (v +- sqrt(D))/2. The linear eigenforms
 * h_t = alpha + (lambda_t/u)*beta satisfy sigma(h_t) = lambda_t * h_t, and
 * their product is the norm form C = alpha^2 + (v/u)*alpha*beta - (1/u)*beta^2
 * with sigma(C) = -u*C.
 *
 * Supported contexts have distinct real eigenvalues whose ratio is not a root
 * of unity: u != 0, D > 0, v != 0.
 */

#include <optional>
#include <string>
#include <vector>

#include "bidiff/bipoly.hpp"
#include "bidiff/linalg.hpp"

namespace bidiff {

// The group of integer pairs (a, b) with lambda1^a * lambda2^b = 1. For the
// supported fields the rank is 0 or 1; a rank-1 generator is primitive and
// normalized to a0 > 0, or a0 == 0 and b0 > 0.
struct RelationLattice {
    int rank = 0;
    long a0 = 0;
    long b0 = 0;
};

// All integer solutions (i, j) of lambda1^i * lambda2^j = mu: nothing, one
// pair, or a coset base + k*step of the relation lattice.
struct ExpSolSet {
    enum class Kind { Empty, Single, Coset };
    Kind kind = Kind::Empty;
    long i0 = 0;
    long j0 = 0;
    long step_i = 0;
    long step_j = 0;

    static ExpSolSet empty() { return {}; }
    static ExpSolSet single(long i, long j) { return {Kind::Single, i, j, 0, 0}; }
    static ExpSolSet coset(long i, long j, long si, long sj) { return {Kind::Coset, i, j, si, sj}; }

    bool contains(long i, long j) const;
};

class DiffField {
public:
    // Validates and builds the full context. Throws FieldConstructionError
    // when u = 0 (degenerate recurrence), D = 0 (repeated eigenvalue),
    // D < 0 (non-real eigenvalues) or v = 0 (eigenvalue ratio -1, a root of
    // unity).
    static DiffField make(const Rat& u, const Rat& v);

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }
    const Rat& D() const { return D_; }
    const QElem& lambda1() const { return lambda1_; }
    const QElem& lambda2() const { return lambda2_; }
    const BiPoly& h1() const { return h1_; }
    const BiPoly& h2() const { return h2_; }
    const BiPoly& norm_form() const { return C_; }
    const SigmaContext& sigma() const { return sigma_; }
    const RelationLattice& lattice() const { return lattice_; }

    BiPoly sigma_pow(const BiPoly& p, int m) const { return apply_sigma(p, m, sigma_); }

    // lambda1^i * lambda2^j, exact.
    QElem lambda_power(long i, long j) const;

private:
    DiffField(Rat u, Rat v);

    Rat u_, v_, D_;
    QElem lambda1_, lambda2_;
    BiPoly h1_, h2_, C_;
    SigmaContext sigma_;
    RelationLattice lattice_;
};

inline DiffField make_field(const Rat& u, const Rat& v) { return DiffField::make(u, v); }

// Coordinates of a homogeneous p of degree n in the eigenform basis:
// p = sum c_k * h1^k * h2^(n-k), returned as (c_0 .. c_n). Throws
// ContractError for non-homogeneous input.
QVector to_eigen(const BiPoly& p, const DiffField& fld);

// Inverse of to_eigen: sum coeffs[k] * h1^k * h2^(n-k) with n = size - 1.
BiPoly from_eigen(const QVector& coeffs, const DiffField& fld);

// If p/q (both homogeneous, q nonzero) is a semi-invariant, returns the
// scalar mu = sigma(p/q)/(p/q) together with the exponent i such that
// mu = lambda1^i * lambda2^(deg p - deg q - i), -deg q <= i <= deg p.
std::optional<std::pair<QElem, long>> classify_semi_invariant(const BiPoly& p, const BiPoly& q,
                                                              const DiffField& fld);

// The complete solution set of lambda1^i * lambda2^j = mu. Every returned
// pair is re-verified by exact exponentiation.
ExpSolSet solve_unit_eq(const QElem& mu, const DiffField& fld);

// For each degree d <= degree_cap, an exact basis of the homogeneous
// sigma-invariant polynomials of degree d, flattened into one list in
// ascending degree order. Degree 0 always contributes {1}.
std::vector<BiPoly> invariant_generators(const DiffField& fld, int degree_cap);

}  // namespace bidiff
