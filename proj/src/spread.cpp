#include "bidiff/spread.hpp"

#include <algorithm>

namespace bidiff {

namespace {

// Exact rational upper bound for |x|.
Rat abs_upper_bound(const QElem& x) {
    if (x.is_rational()) return abs(x.rational_part());
    RatInterval iv = x.approx(64);
    return std::max(abs(iv.lo), abs(iv.hi));
}

// Exact rational positive lower bound for |x|, x != 0.
Rat abs_lower_bound(const QElem& x) {
    if (x.is_rational()) return abs(x.rational_part());
    RatInterval iv = nonzero_interval(x);
    return sgn(iv.lo) > 0 ? iv.lo : -iv.hi;
}

struct RootModulusBounds {
    bool has_roots = false;  // false when the non-eigen part is trivial
    Rat lower;
    Rat upper;
};

// Cauchy-style bounds on the moduli of the nonzero roots of the eigen
// coordinate polynomial P(z) = sum c_k z^k of a homogeneous p.
RootModulusBounds root_bounds(const BiPoly& p, const DiffField& fld) {
    QVector c = to_eigen(p, fld);
    std::size_t lo = 0;
    std::size_t hi = c.size();
    while (lo < c.size() && c[lo].is_zero()) ++lo;
    while (hi > lo && c[hi - 1].is_zero()) --hi;
    RootModulusBounds out;
    if (hi - lo < 2) return out;  // single eigen monomial: no nonzero roots
    out.has_roots = true;

    Rat top_low = abs_lower_bound(c[hi - 1]);
    Rat bot_low = abs_lower_bound(c[lo]);
    Rat max_over_top(0);
    Rat max_over_bot(0);
    for (std::size_t k = lo; k < hi; ++k) {
        if (c[k].is_zero()) continue;
        Rat up = abs_upper_bound(c[k]);
        if (k + 1 < hi) max_over_top = std::max(max_over_top, Rat(up / top_low));
        if (k > lo) max_over_bot = std::max(max_over_bot, Rat(up / bot_low));
    }
    out.upper = 1 + max_over_top;
    out.lower = Rat(1) / (1 + max_over_bot);
    return out;
}

// All m >= 0 with lower <= |r|^m <= upper, for |r| != 1.
std::vector<int> magnitude_window(const QElem& r, const Rat& lower, const Rat& upper) {
    std::vector<int> out;
    QElem lower_q{lower};
    QElem upper_q{upper};
    bool growing = cmp_abs(r, QElem(Rat(1))) > 0;
    QElem acc(Rat(1));
    for (int m = 0; m <= 1 << 14; ++m) {
        int vs_low = cmp_abs(acc, lower_q);
        int vs_high = cmp_abs(acc, upper_q);
        if (vs_low >= 0 && vs_high <= 0) out.push_back(m);
        if (growing && vs_high > 0) return out;
        if (!growing && vs_low < 0) return out;
        acc *= r;
    }
    throw Error("spread_set: candidate window failed to close");
}

}  // namespace

std::set<int> spread_set(const BiPoly& p, const BiPoly& q, const DiffField& fld, int max_shift) {
    if (p.is_zero() || q.is_zero()) throw ContractError("spread_set: inputs must be nonzero");
    if (!p.is_homogeneous() || !q.is_homogeneous())
        throw ContractError("spread_set: inputs must be homogeneous");
    if (poly_gcd(p, q).degree_nonzero() > 0)
        throw InfiniteSpreadError("spread_set: inputs share a factor; spread may be infinite");

    std::set<int> candidates;
    RootModulusBounds bp = root_bounds(p, fld);
    RootModulusBounds bq = root_bounds(q, fld);
    if (bp.has_roots && bq.has_roots) {
        // A common root at shift m needs rho_p = rho_q * r^m with
        // r = lambda2/lambda1, so |r|^m lies between the bound quotients.
        QElem r = fld.lambda2() / fld.lambda1();
        for (int m : magnitude_window(r, bp.lower / bq.upper, bp.upper / bq.lower))
            candidates.insert(m);
    }
    for (int m = 0; m <= max_shift; ++m) candidates.insert(m);

    std::set<int> out;
    for (int m : candidates) {
        BiPoly shifted = fld.sigma_pow(q, m);
        if (poly_gcd(p, shifted).degree_nonzero() > 0) out.insert(m);
    }
    return out;
}

StripResult strip(const BiPoly& p, const BiPoly& q, const DiffField& fld, int max_shift) {
    if (p.is_zero() || q.is_zero()) throw ContractError("strip: inputs must be nonzero");
    if (!p.is_homogeneous() || !q.is_homogeneous())
        throw ContractError("strip: inputs must be homogeneous");

    BiPoly g = poly_gcd(p, q);
    BiPoly a = g.degree_nonzero() > 0 ? divide_exact(p, g) : p;
    BiPoly b = g.degree_nonzero() > 0 ? divide_exact(q, g) : q;

    StripResult out;
    out.t = BiPoly(QElem(Rat(1)));
    out.h = BiPoly(QElem(Rat(1)));

    for (int k : spread_set(a, b, fld, max_shift)) {
        BiPoly s = poly_gcd(a, fld.sigma_pow(b, k));
        if (s.degree_nonzero() == 0) continue;
        a = divide_exact(a, s);
        b = divide_exact(b, fld.sigma_pow(s, -k));
        for (int j = 1; j <= k; ++j) out.t *= fld.sigma_pow(s, -j);
        out.s_factors.emplace_back(k, s);
    }
    for (int l : spread_set(b, a, fld, max_shift)) {
        BiPoly r = poly_gcd(b, fld.sigma_pow(a, l));
        if (r.degree_nonzero() == 0) continue;
        b = divide_exact(b, r);
        a = divide_exact(a, fld.sigma_pow(r, -l));
        for (int j = 1; j <= l; ++j) out.h *= fld.sigma_pow(r, -j);
        out.r_factors.emplace_back(l, r);
    }

    out.a_final = a;
    out.b_final = b;
    if (a.is_constant() && b.is_constant())
        out.ratio = -b.coeff(0, 0) / a.coeff(0, 0);
    return out;
}

}  // namespace bidiff
