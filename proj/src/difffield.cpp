#include "bidiff/difffield.hpp"

#include <algorithm>
#include <numeric>

namespace bidiff {

bool ExpSolSet::contains(long i, long j) const {
    switch (kind) {
        case Kind::Empty:
            return false;
        case Kind::Single:
            return i == i0 && j == j0;
        case Kind::Coset: {
            long di = i - i0;
            long dj = j - j0;
            if (step_i != 0) {
                if (di % step_i != 0) return false;
                long k = di / step_i;
                return j0 + k * step_j == j;
            }
            if (di != 0) return false;
            if (step_j == 0) return dj == 0;
            return dj % step_j == 0;
        }
    }
    return false;
}

DiffField::DiffField(Rat u, Rat v)
    : u_(std::move(u)), v_(std::move(v)), D_(v_ * v_ + 4 * u_), sigma_(u_, v_) {
    lambda1_ = QElem(v_ / 2, Rat(1, 2), D_);
    lambda2_ = QElem(v_ / 2, Rat(-1, 2), D_);
    QElem inv_u{QElem(u_).inv()};
    h1_ = BiPoly::alpha() + (lambda1_ * inv_u) * BiPoly::beta();
    h2_ = BiPoly::alpha() + (lambda2_ * inv_u) * BiPoly::beta();
    C_ = h1_ * h2_;
}

QElem DiffField::lambda_power(long i, long j) const {
    return lambda1_.pow(i) * lambda2_.pow(j);
}

namespace {

// ---------------------------------------------------------------------------
// Exact discrete logarithms.
// ---------------------------------------------------------------------------

// Sign of |x| - 1.
int cmp_abs_one(const QElem& x) { return cmp_abs(x, QElem(Rat(1))); }

constexpr long kMaxExponent = 1L << 20;

// The unique integer e with r^e == w, when it exists. Requires |r| != 1 and
// r, w nonzero; exact throughout. |r|^e is strictly monotone in e, so the
// magnitude equation pins e, and one exact comparison settles the sign.
std::optional<long> dlog_exact(const QElem& r, const QElem& w) {
    if (r.is_zero() || w.is_zero()) throw ContractError("dlog_exact: zero argument");
    int rc = cmp_abs_one(r);
    if (rc == 0) throw ContractError("dlog_exact: |r| = 1 admits no unique logarithm");
    if (rc < 0) {
        auto e = dlog_exact(r.inv(), w);
        if (e) return -*e;
        return std::nullopt;
    }
    // |r| > 1 from here on.
    int wc = cmp_abs_one(w);
    if (wc == 0) return w.is_one() ? std::optional<long>(0) : std::nullopt;
    if (wc < 0) {
        auto e = dlog_exact(r, w.inv());
        if (e) return -*e;
        return std::nullopt;
    }
    // |w| > 1, so e >= 1. Find the smallest e with |r|^e >= |w| by doubling
    // plus binary search, then verify equality exactly.
    long hi = 1;
    while (cmp_abs(r.pow(hi), w) < 0) {
        hi *= 2;
        if (hi > kMaxExponent) throw Error("dlog_exact: exponent out of supported range");
    }
    long lo = hi / 2 + 1;
    if (hi == 1) lo = 1;
    while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (cmp_abs(r.pow(mid), w) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (cmp_abs(r.pow(lo), w) != 0) return std::nullopt;
    return r.pow(lo) == w ? std::optional<long>(lo) : std::nullopt;
}

// ---------------------------------------------------------------------------
// Coprime-base factorization (factor refinement). Exact valuations without
// integer factorization: the base is pairwise coprime and every input is a
// product of base powers.
// ---------------------------------------------------------------------------

std::vector<Int> coprime_base(std::vector<Int> xs) {
    std::vector<Int> work;
    for (auto& x : xs) {
        if (x < 0) x = -x;
        if (x > 1) work.push_back(x);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                if (work[i] == work[j]) {
                    work.erase(work.begin() + j);
                    changed = true;
                    break;
                }
                Int g = gcd(work[i], work[j]);
                if (g == 1) continue;
                Int a = work[i] / g;
                Int b = work[j] / g;
                work.erase(work.begin() + j);
                work.erase(work.begin() + i);
                for (const Int& piece : {a, g, b})
                    if (piece > 1) work.push_back(piece);
                changed = true;
            }
        }
    }
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
    return work;
}

long valuation(Int n, const Int& b) {
    long e = 0;
    while (n % b == 0) {
        n /= b;
        ++e;
    }
    return e;
}

long rat_valuation(const Rat& r, const Int& b) {
    return valuation(abs(r.get_num()), b) - valuation(r.get_den(), b);
}

// ---------------------------------------------------------------------------
// Integer affine systems in two unknowns: p*i + q*j = r per row.
// ---------------------------------------------------------------------------

struct Row {
    long p, q, r;
};

struct IntLineSolution {
    enum class Kind { Empty, Point, Line } kind = Kind::Empty;
    long i0 = 0, j0 = 0;   // point / line base
    long di = 0, dj = 0;   // line direction
};

long ext_gcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

IntLineSolution solve_int_rows(const std::vector<Row>& rows_in) {
    std::vector<Row> rows;
    for (const Row& row : rows_in) {
        if (row.p == 0 && row.q == 0) {
            if (row.r != 0) return {};
            continue;
        }
        rows.push_back(row);
    }
    if (rows.empty())
        throw ContractError("solve_int_rows: unconstrained system (both eigenvalues are units)");

    const Row& first = rows.front();
    long x, y;
    long g = ext_gcd(first.p, first.q, x, y);
    if (first.r % g != 0) return {};
    IntLineSolution sol;
    sol.kind = IntLineSolution::Kind::Line;
    sol.i0 = x * (first.r / g);
    sol.j0 = y * (first.r / g);
    sol.di = first.q / g;
    sol.dj = -first.p / g;

    for (std::size_t k = 1; k < rows.size(); ++k) {
        const Row& row = rows[k];
        long base_val = row.p * sol.i0 + row.q * sol.j0;
        long slope = row.p * sol.di + row.q * sol.dj;
        if (sol.kind == IntLineSolution::Kind::Point) {
            if (base_val != row.r) return {};
            continue;
        }
        if (slope == 0) {
            if (base_val != row.r) return {};
            continue;
        }
        long num = row.r - base_val;
        if (num % slope != 0) return {};
        long t = num / slope;
        sol.i0 += t * sol.di;
        sol.j0 += t * sol.dj;
        sol.kind = IntLineSolution::Kind::Point;
    }
    return sol;
}

// ---------------------------------------------------------------------------
// The two solver branches.
// ---------------------------------------------------------------------------

ExpSolSet verify_line(const QElem& mu, const DiffField& fld, long i0, long j0, long di, long dj) {
    // Along the line the value gains a factor lambda1^di * lambda2^dj per
    // step; by construction that factor has magnitude 1, hence is +-1.
    QElem step_val = fld.lambda_power(di, dj);
    if (step_val.is_one()) {
        if (fld.lambda_power(i0, j0) == mu) return ExpSolSet::coset(i0, j0, di, dj);
        return ExpSolSet::empty();
    }
    if (step_val == QElem(Rat(-1))) {
        if (fld.lambda_power(i0, j0) == mu) return ExpSolSet::coset(i0, j0, 2 * di, 2 * dj);
        if (fld.lambda_power(i0 + di, j0 + dj) == mu)
            return ExpSolSet::coset(i0 + di, j0 + dj, 2 * di, 2 * dj);
        return ExpSolSet::empty();
    }
    throw Error("solve_unit_eq: line step is not a unit; relation system is inconsistent");
}

ExpSolSet solve_unit_rational(const QElem& mu, const DiffField& fld) {
    if (!mu.is_rational()) return ExpSolSet::empty();
    const Rat l1 = fld.lambda1().rational_part();
    const Rat l2 = fld.lambda2().rational_part();
    const Rat m = mu.rational_part();

    std::vector<Int> base = coprime_base(
        {l1.get_num(), l1.get_den(), l2.get_num(), l2.get_den(), m.get_num(), m.get_den()});
    std::vector<Row> rows;
    for (const Int& b : base) {
        long vp = rat_valuation(l1, b);
        long vq = rat_valuation(l2, b);
        long vr = rat_valuation(m, b);
        rows.push_back({vp, vq, vr});
    }
    IntLineSolution sol = solve_int_rows(rows);
    switch (sol.kind) {
        case IntLineSolution::Kind::Empty:
            return ExpSolSet::empty();
        case IntLineSolution::Kind::Point:
            if (fld.lambda_power(sol.i0, sol.j0) == mu) return ExpSolSet::single(sol.i0, sol.j0);
            return ExpSolSet::empty();
        case IntLineSolution::Kind::Line:
            return verify_line(mu, fld, sol.i0, sol.j0, sol.di, sol.dj);
    }
    return ExpSolSet::empty();
}

ExpSolSet solve_unit_irrational(const QElem& mu, const DiffField& fld) {
    // Conjugating lambda1^i * lambda2^j = mu swaps the lambdas, so the
    // quotient pins i - j through (lambda1/lambda2)^(i-j) = mu/conj(mu), and
    // the product reduces to the rational equation (-u)^(i+j) = norm(mu).
    QElem ratio = fld.lambda1() / fld.lambda2();
    QElem w = mu / mu.conj();
    auto e_opt = dlog_exact(ratio, w);
    if (!e_opt) return ExpSolSet::empty();
    long e = *e_opt;

    Rat neg_u = -fld.u();
    Rat norm_mu = mu.norm();
    if (neg_u != 1 && neg_u != -1) {
        auto s_opt = dlog_exact(QElem(neg_u), QElem(norm_mu));
        if (!s_opt) return ExpSolSet::empty();
        long s = *s_opt;
        if ((s + e) % 2 != 0) return ExpSolSet::empty();
        long i = (s + e) / 2;
        long j = (s - e) / 2;
        if (fld.lambda_power(i, j) == mu) return ExpSolSet::single(i, j);
        return ExpSolSet::empty();
    }
    if (neg_u == 1) {
        // lambda1*lambda2 = 1: i + j is unconstrained apart from parity.
        if (norm_mu != 1) return ExpSolSet::empty();
        return verify_line(mu, fld, e, 0, 1, 1);
    }
    // -u = -1: (-1)^(i+j) = norm(mu) forces the parity of i + j.
    int parity_needed;
    if (norm_mu == 1)
        parity_needed = 0;
    else if (norm_mu == -1)
        parity_needed = 1;
    else
        return ExpSolSet::empty();
    if (((e % 2) + 2) % 2 != parity_needed) return ExpSolSet::empty();
    return verify_line(mu, fld, e, 0, 1, 1);
}

ExpSolSet solve_unit_core(const QElem& mu, const DiffField& fld) {
    if (mu.is_zero()) throw ContractError("solve_unit_eq: mu must be nonzero");
    ExpSolSet sol = fld.lambda1().is_rational() ? solve_unit_rational(mu, fld)
                                                : solve_unit_irrational(mu, fld);
    if (sol.kind == ExpSolSet::Kind::Coset) {
        // Canonical step orientation: first component nonnegative, second
        // positive when the first vanishes.
        if (sol.step_i < 0 || (sol.step_i == 0 && sol.step_j < 0)) {
            sol.step_i = -sol.step_i;
            sol.step_j = -sol.step_j;
        }
    }
    return sol;
}

}  // namespace

DiffField DiffField::make(const Rat& u, const Rat& v) {
    if (u == 0) throw FieldConstructionError("make_field: u = 0 degenerates the recurrence");
    Rat D = v * v + 4 * u;
    if (D == 0)
        throw FieldConstructionError("make_field: D = 0 gives a repeated eigenvalue");
    if (D < 0)
        throw FieldConstructionError("make_field: D < 0 gives non-real eigenvalues (unsupported)");
    if (v == 0)
        throw FieldConstructionError(
            "make_field: v = 0 makes lambda1/lambda2 = -1, a root of unity");
    DiffField fld(u, v);
    ExpSolSet identity_solutions = solve_unit_core(QElem(Rat(1)), fld);
    if (identity_solutions.kind == ExpSolSet::Kind::Coset) {
        fld.lattice_.rank = 1;
        fld.lattice_.a0 = identity_solutions.step_i;
        fld.lattice_.b0 = identity_solutions.step_j;
    } else {
        fld.lattice_.rank = 0;
    }
    return fld;
}

QVector to_eigen(const BiPoly& p, const DiffField& fld) {
    if (!p.is_homogeneous()) throw ContractError("to_eigen: input must be homogeneous");
    if (p.is_zero()) return {};
    int n = p.degree_nonzero();
    // Columns: coefficient vectors of h1^k * h2^(n-k) over the monomials
    // alpha^i beta^(n-i); the basis is independent since lambda1 != lambda2.
    QMatrix m(n + 1, QVector(n + 1));
    for (int k = 0; k <= n; ++k) {
        BiPoly basis = fld.h1().pow(k) * fld.h2().pow(n - k);
        for (int i = 0; i <= n; ++i) m[i][k] = basis.coeff(i, n - i);
    }
    QVector rhs(n + 1);
    for (int i = 0; i <= n; ++i) rhs[i] = p.coeff(i, n - i);
    AffineSolution sol = linsolve(std::move(m), std::move(rhs));
    if (!sol.particular || !sol.nullspace_basis.empty())
        throw Error("to_eigen: eigenform basis was not independent (internal bug)");
    return *sol.particular;
}

BiPoly from_eigen(const QVector& coeffs, const DiffField& fld) {
    if (coeffs.empty()) return BiPoly();
    int n = static_cast<int>(coeffs.size()) - 1;
    BiPoly out;
    for (int k = 0; k <= n; ++k) {
        if (coeffs[k].is_zero()) continue;
        out += coeffs[k] * (fld.h1().pow(k) * fld.h2().pow(n - k));
    }
    return out;
}

std::optional<std::pair<QElem, long>> classify_semi_invariant(const BiPoly& p, const BiPoly& q,
                                                              const DiffField& fld) {
    if (q.is_zero()) throw ContractError("classify_semi_invariant: q must be nonzero");
    if (!p.is_homogeneous() || !q.is_homogeneous())
        throw ContractError("classify_semi_invariant: inputs must be homogeneous");
    if (p.is_zero()) return std::nullopt;

    BiPoly lhs = fld.sigma_pow(p, 1) * q;
    BiPoly rhs = p * fld.sigma_pow(q, 1);
    auto mu = lhs.proportionality(rhs);
    if (!mu) return std::nullopt;

    long dp = p.degree_nonzero();
    long dq = q.degree_nonzero();
    for (long i = -dq; i <= dp; ++i) {
        if (fld.lambda_power(i, dp - dq - i) == *mu) {
            if (q.is_constant()) {
                // A homogeneous polynomial semi-invariant must be a single
                // eigenform monomial c * h1^i * h2^(m-i).
                QVector eigen = to_eigen(p, fld);
                std::size_t nonzero = 0;
                for (const auto& c : eigen) nonzero += c.is_zero() ? 0 : 1;
                if (nonzero != 1 || eigen[static_cast<std::size_t>(i)].is_zero())
                    throw Error("classify_semi_invariant: eigenform certificate failed");
            }
            return std::make_pair(*mu, i);
        }
    }
    return std::nullopt;
}

ExpSolSet solve_unit_eq(const QElem& mu, const DiffField& fld) {
    return solve_unit_core(mu, fld);
}

std::vector<BiPoly> invariant_generators(const DiffField& fld, int degree_cap) {
    if (degree_cap < 0) throw ContractError("invariant_generators: negative degree cap");
    std::vector<BiPoly> out;
    for (int d = 0; d <= degree_cap; ++d) {
        // Nullspace of (sigma - id) on the degree-d coefficient space.
        QMatrix m(d + 1, QVector(d + 1));
        for (int k = 0; k <= d; ++k) {
            BiPoly image = fld.sigma_pow(BiPoly::monomial(k, d - k, QElem(Rat(1))), 1);
            for (int i = 0; i <= d; ++i) {
                m[i][k] = image.coeff(i, d - i);
                if (i == k) m[i][k] -= QElem(Rat(1));
            }
        }
        AffineSolution sol = linsolve(std::move(m), QVector(d + 1));
        for (const QVector& vec : sol.nullspace_basis) {
            BiPoly w;
            for (int k = 0; k <= d; ++k) w.set_coeff(k, d - k, vec[k]);
            out.push_back(w.monic());
        }
    }
    return out;
}

}  // namespace bidiff
