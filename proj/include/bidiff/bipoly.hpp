#pragma once

/**
 * Sparse exact bivariate polynomials in alpha, beta over Q(sqrt(D)), with the
 * shift action sigma(alpha) = beta, sigma(beta) = u*alpha + v*beta.
 *
 * Terms are kept in total-degree lexicographic order with alpha > beta,
 * descending, so iteration starts at the leading term. Zero coefficients are
 * never stored; the zero polynomial has no terms and its degree is reported
 * as an absent optional rather than a fake integer.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bidiff/qelem.hpp"

namespace bidiff {

struct ExpPair {
    int alpha;
    int beta;
    int total() const { return alpha + beta; }
    friend bool operator==(ExpPair a, ExpPair b) { return a.alpha == b.alpha && a.beta == b.beta; }
};

// Total-degree lex with alpha > beta, descending (leading term first).
struct TermOrderDesc {
    bool operator()(ExpPair a, ExpPair b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.alpha > b.alpha;
    }
};

class BiPoly {
public:
    using TermMap = std::map<ExpPair, QElem, TermOrderDesc>;

    BiPoly() = default;
    explicit BiPoly(const QElem& constant);
    explicit BiPoly(const Rat& constant) : BiPoly(QElem(constant)) {}

    static BiPoly alpha();
    static BiPoly beta();
    static BiPoly monomial(int alpha_exp, int beta_exp, const QElem& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_homogeneous() const;

    // Total degree; absent for the zero polynomial.
    std::optional<int> degree() const;

    // Degree of a polynomial known to be nonzero.
    int degree_nonzero() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    QElem coeff(int alpha_exp, int beta_exp) const;
    void set_coeff(int alpha_exp, int beta_exp, const QElem& c);

    ExpPair leading_exponents() const;  // throws on zero
    const QElem& leading_coeff() const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator-(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator*(const BiPoly& p, const BiPoly& q);
    friend BiPoly operator*(const QElem& c, const BiPoly& p);
    BiPoly& operator+=(const BiPoly& q) { return *this = *this + q; }
    BiPoly& operator-=(const BiPoly& q) { return *this = *this - q; }
    BiPoly& operator*=(const BiPoly& q) { return *this = *this * q; }
    friend bool operator==(const BiPoly& p, const BiPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const BiPoly& p, const BiPoly& q) { return !(p == q); }

    BiPoly pow(int e) const;

    // Leading coefficient scaled to 1; zero stays zero.
    BiPoly monic() const;

    // If *this == mu * other for a scalar mu, returns mu.
    std::optional<QElem> proportionality(const BiPoly& other) const;

    QElem eval(const QElem& alpha_val, const QElem& beta_val) const;
    QElem eval(const Rat& alpha_val, const Rat& beta_val) const {
        return eval(QElem(alpha_val), QElem(beta_val));
    }

    // Canonical text form, e.g. "1/2*alpha^3 - 3*alpha*beta^2".
    std::string to_string() const;

private:
    TermMap terms_;  // invariant: no zero coefficients
};

// Homogeneous parts, ascending by degree, zero parts omitted.
std::vector<std::pair<int, BiPoly>> hom_components(const BiPoly& p);

// The homogeneous component of a given degree (zero if absent).
BiPoly hom_component(const BiPoly& p, int degree);

// The shift automorphism context: sigma(alpha, beta) = (alpha, beta) * A with
// A = ((0, u), (1, v)); det A = -u != 0 so sigma is invertible.
class SigmaContext {
public:
    SigmaContext(Rat u, Rat v);
    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }

private:
    Rat u_;
    Rat v_;
};

// sigma^m applied to p; m may be negative.
BiPoly apply_sigma(const BiPoly& p, int m, const SigmaContext& ctx);

// Monic gcd. Exact for homogeneous inputs (the library's working path);
// non-homogeneous inputs fall back to the common monomial factor plus a
// univariate Euclid when both primitive parts share a single variable.
BiPoly poly_gcd(const BiPoly& p, const BiPoly& q);

// p / q when the division is exact; nullopt otherwise.
std::optional<BiPoly> try_divide(const BiPoly& p, const BiPoly& q);

// p / q with zero remainder; throws DivisibilityError otherwise.
BiPoly divide_exact(const BiPoly& p, const BiPoly& q);

}  // namespace bidiff
