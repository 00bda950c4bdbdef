#pragma once

/**
 * Exact arithmetic in the real quadratic extension Q(sqrt(D)).
 *
 * A QElem is a + b*sqrt(D) with rational a, b and a rational discriminant D
 * shared per context. Two invariants keep the representation canonical:
 *
 *   - if D is the square of a rational, the radical is folded into the
 *     rational part at construction, so the element is stored with b = 0;
 *   - whenever b = 0 the stored discriminant is 0, which makes pure
 *     rationals compatible with every context.
 *
 * Values are immutable; all operations are pure. Mixing two genuinely
 * radical values over different discriminants throws ContextError.
 */

#include <string>

#include "bidiff/rat.hpp"

namespace bidiff {

// Closed interval with exact rational endpoints; the result type of approx().
struct RatInterval {
    Rat lo;
    Rat hi;
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    Rat width() const { return hi - lo; }
};

class QElem {
public:
    QElem() : a_(0), b_(0), d_(0) {}
    QElem(int v) : a_(v), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QElem(const Rat& v) : a_(v), b_(0), d_(0) {}
    QElem(Rat rational_part, Rat radical_part, Rat discriminant);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    const Rat& discriminant() const { return d_; }

    bool is_zero() const { return b_ == 0 && a_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    // Exact sign of the real value (sqrt(D) taken positive); no rounding.
    int sign() const;

    QElem operator-() const;
    friend QElem operator+(const QElem& x, const QElem& y);
    friend QElem operator-(const QElem& x, const QElem& y);
    friend QElem operator*(const QElem& x, const QElem& y);
    friend QElem operator/(const QElem& x, const QElem& y);
    QElem& operator+=(const QElem& y) { return *this = *this + y; }
    QElem& operator-=(const QElem& y) { return *this = *this - y; }
    QElem& operator*=(const QElem& y) { return *this = *this * y; }
    QElem& operator/=(const QElem& y) { return *this = *this / y; }

    // Value equality (independent of how the radical is scaled, e.g.
    // 1 + sqrt(8)/2 over D=8 equals 1 + sqrt(2) over D=2).
    friend bool operator==(const QElem& x, const QElem& y);
    friend bool operator!=(const QElem& x, const QElem& y) { return !(x == y); }

    // Galois conjugate sqrt(D) -> -sqrt(D).
    QElem conj() const;

    // Multiplicative inverse; throws DivisionError on zero.
    QElem inv() const;

    // x * conj(x), always rational.
    Rat norm() const;

    // Integer power (negative exponents invert first).
    QElem pow(long e) const;

    // An interval guaranteed to contain the real value, of width at most
    // 2^-bits * max(1, |x|). Endpoints are dyadic when a radical is present
    // and the exact value for pure rationals. bits must be >= 8.
    RatInterval approx(unsigned bits) const;

    std::string to_string() const;

private:
    Rat a_;  // rational part
    Rat b_;  // radical part
    Rat d_;  // discriminant; 0 iff b_ == 0

    void normalize();
    static Rat merged_discriminant(const QElem& x, const QElem& y);
};

inline QElem q_mul(const QElem& x, const QElem& y) { return x * y; }
inline QElem q_inv(const QElem& x) { return x.inv(); }
inline QElem q_conj(const QElem& x) { return x.conj(); }
inline RatInterval q_approx(const QElem& x, unsigned bits) { return x.approx(bits); }

// Compares |x| with |y| exactly: -1, 0, or +1.
int cmp_abs(const QElem& x, const QElem& y);

// Escalation helper: an interval around x excluding zero, doubling precision
// from `start_bits` up to the ceiling (default 2^16 bits). Throws
// PrecisionExhaustedError at the ceiling, never guesses.
RatInterval nonzero_interval(const QElem& x, unsigned start_bits = 64,
                             unsigned ceiling_bits = 1u << 16);

}  // namespace bidiff
