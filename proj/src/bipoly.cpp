#include "bidiff/bipoly.hpp"

#include <algorithm>
#include <array>

namespace bidiff {

BiPoly::BiPoly(const QElem& constant) {
    if (!constant.is_zero()) terms_[{0, 0}] = constant;
}

BiPoly BiPoly::alpha() { return monomial(1, 0, QElem(Rat(1))); }
BiPoly BiPoly::beta() { return monomial(0, 1, QElem(Rat(1))); }

BiPoly BiPoly::monomial(int alpha_exp, int beta_exp, const QElem& coeff) {
    if (alpha_exp < 0 || beta_exp < 0) throw ContractError("BiPoly: negative exponent");
    BiPoly p;
    if (!coeff.is_zero()) p.terms_[{alpha_exp, beta_exp}] = coeff;
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

bool BiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total();
    return terms_.rbegin()->first.total() == d;
}

std::optional<int> BiPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total();
}

int BiPoly::degree_nonzero() const {
    if (terms_.empty()) throw ContractError("BiPoly: degree of the zero polynomial");
    return terms_.begin()->first.total();
}

QElem BiPoly::coeff(int alpha_exp, int beta_exp) const {
    auto it = terms_.find({alpha_exp, beta_exp});
    return it == terms_.end() ? QElem() : it->second;
}

void BiPoly::set_coeff(int alpha_exp, int beta_exp, const QElem& c) {
    if (c.is_zero())
        terms_.erase({alpha_exp, beta_exp});
    else
        terms_[{alpha_exp, beta_exp}] = c;
}

ExpPair BiPoly::leading_exponents() const {
    if (terms_.empty()) throw ContractError("BiPoly: leading term of the zero polynomial");
    return terms_.begin()->first;
}

const QElem& BiPoly::leading_coeff() const {
    if (terms_.empty()) throw ContractError("BiPoly: leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

BiPoly operator+(const BiPoly& p, const BiPoly& q) {
    BiPoly out = p;
    for (const auto& [e, c] : q.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

BiPoly operator-(const BiPoly& p, const BiPoly& q) { return p + (-q); }

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
    BiPoly out;
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            ExpPair e{ep.alpha + eq.alpha, ep.beta + eq.beta};
            QElem prod = cp * cq;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                if (!prod.is_zero()) out.terms_[e] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

BiPoly operator*(const QElem& c, const BiPoly& p) {
    BiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms_) out.terms_[e] = c * pc;
    return out;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw ContractError("BiPoly: negative power");
    BiPoly acc(QElem(Rat(1)));
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

BiPoly BiPoly::monic() const {
    if (terms_.empty()) return *this;
    return leading_coeff().inv() * *this;
}

std::optional<QElem> BiPoly::proportionality(const BiPoly& other) const {
    if (other.is_zero()) return is_zero() ? std::optional<QElem>(QElem()) : std::nullopt;
    if (is_zero()) return std::nullopt;
    if (terms_.size() != other.terms_.size()) return std::nullopt;
    if (!(leading_exponents() == other.leading_exponents())) return std::nullopt;
    QElem mu = leading_coeff() / other.leading_coeff();
    return *this == mu * other ? std::optional<QElem>(mu) : std::nullopt;
}

QElem BiPoly::eval(const QElem& alpha_val, const QElem& beta_val) const {
    QElem acc;
    for (const auto& [e, c] : terms_)
        acc += c * alpha_val.pow(e.alpha) * beta_val.pow(e.beta);
    return acc;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        QElem coeff = c;
        bool negative = coeff.is_rational() && coeff.sign() < 0;
        if (first) {
            if (negative) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            out += negative ? " - " : " + ";
            if (negative) coeff = -coeff;
        }
        first = false;

        std::string vars;
        if (e.alpha > 0) vars += e.alpha == 1 ? "alpha" : "alpha^" + std::to_string(e.alpha);
        if (e.beta > 0) {
            if (!vars.empty()) vars += "*";
            vars += e.beta == 1 ? "beta" : "beta^" + std::to_string(e.beta);
        }
        std::string cs = coeff.is_rational() ? rat_to_string(coeff.rational_part())
                                             : "(" + coeff.to_string() + ")";
        if (vars.empty())
            out += cs;
        else if (cs == "1")
            out += vars;
        else
            out += cs + "*" + vars;
    }
    return out;
}

std::vector<std::pair<int, BiPoly>> hom_components(const BiPoly& p) {
    std::map<int, BiPoly> parts;
    for (const auto& [e, c] : p.terms()) parts[e.total()].set_coeff(e.alpha, e.beta, c);
    std::vector<std::pair<int, BiPoly>> out;
    out.reserve(parts.size());
    for (auto& [d, part] : parts) out.emplace_back(d, std::move(part));
    return out;
}

BiPoly hom_component(const BiPoly& p, int degree) {
    BiPoly out;
    for (const auto& [e, c] : p.terms())
        if (e.total() == degree) out.set_coeff(e.alpha, e.beta, c);
    return out;
}

SigmaContext::SigmaContext(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_ == 0) throw ContractError("SigmaContext: u must be nonzero (sigma must be invertible)");
}

namespace {

using Mat2 = std::array<std::array<Rat, 2>, 2>;

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
    return out;
}

Mat2 sigma_matrix_power(const SigmaContext& ctx, int m) {
    Mat2 base;
    if (m >= 0) {
        base = {{{Rat(0), ctx.u()}, {Rat(1), ctx.v()}}};
    } else {
        base = {{{-ctx.v() / ctx.u(), Rat(1)}, {Rat(1) / ctx.u(), Rat(0)}}};
        m = -m;
    }
    Mat2 acc = {{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    while (m > 0) {
        if (m & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        m >>= 1;
    }
    return acc;
}

}  // namespace

BiPoly apply_sigma(const BiPoly& p, int m, const SigmaContext& ctx) {
    if (p.is_zero() || m == 0) return p;
    Mat2 mat = sigma_matrix_power(ctx, m);
    // Row-vector convention: sigma^m(alpha) = M[0][0]*alpha + M[1][0]*beta.
    BiPoly img_alpha = QElem(mat[0][0]) * BiPoly::alpha() + QElem(mat[1][0]) * BiPoly::beta();
    BiPoly img_beta = QElem(mat[0][1]) * BiPoly::alpha() + QElem(mat[1][1]) * BiPoly::beta();

    int max_a = 0;
    int max_b = 0;
    for (const auto& [e, c] : p.terms()) {
        max_a = std::max(max_a, e.alpha);
        max_b = std::max(max_b, e.beta);
    }
    std::vector<BiPoly> pow_a(max_a + 1), pow_b(max_b + 1);
    pow_a[0] = BiPoly(QElem(Rat(1)));
    for (int i = 1; i <= max_a; ++i) pow_a[i] = pow_a[i - 1] * img_alpha;
    pow_b[0] = BiPoly(QElem(Rat(1)));
    for (int j = 1; j <= max_b; ++j) pow_b[j] = pow_b[j - 1] * img_beta;

    BiPoly out;
    for (const auto& [e, c] : p.terms()) out += c * (pow_a[e.alpha] * pow_b[e.beta]);
    return out;
}

namespace {

// Univariate scratch polynomials over Q(sqrt(D)); coefficient of x^i at [i].
struct UniPoly {
    std::vector<QElem> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }

    UniPoly monic() const {
        UniPoly out = *this;
        if (out.is_zero()) return out;
        QElem inv = out.c.back().inv();
        for (auto& x : out.c) x *= inv;
        return out;
    }
};

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (!a.is_zero() && a.deg() >= b.deg()) {
        QElem factor = a.c.back() / b.c.back();
        int shift = a.deg() - b.deg();
        for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] -= factor * b.c[i];
        a.trim();
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        UniPoly r = uni_rem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

// For homogeneous p of degree n: p = beta^(n - deg P) * homogenize(P) with
// P(x) = p(x, 1).
UniPoly dehomogenize(const BiPoly& p) {
    UniPoly out;
    for (const auto& [e, coeff] : p.terms()) {
        if (out.c.size() < static_cast<std::size_t>(e.alpha + 1))
            out.c.resize(e.alpha + 1, QElem());
        out.c[e.alpha] = coeff;
    }
    out.trim();
    return out;
}

BiPoly homogenize(const UniPoly& u, int degree) {
    BiPoly out;
    for (int i = 0; i <= u.deg(); ++i)
        if (!u.c[i].is_zero()) out.set_coeff(i, degree - i, u.c[i]);
    return out;
}

BiPoly gcd_homogeneous(const BiPoly& p, const BiPoly& q) {
    int np = p.degree_nonzero();
    int nq = q.degree_nonzero();
    UniPoly up = dehomogenize(p);
    UniPoly uq = dehomogenize(q);
    // The dehomogenization at beta = 1 drops the pure beta-power factors, so
    // carry them along separately.
    int beta_p = np - up.deg();
    int beta_q = nq - uq.deg();
    UniPoly g = uni_gcd(up, uq);
    BiPoly out = homogenize(g, g.deg());
    int shared_beta = std::min(beta_p, beta_q);
    if (shared_beta > 0) out *= BiPoly::monomial(0, shared_beta, QElem(Rat(1)));
    return out;
}

// Splits p into alpha^a * beta^b * primitive monomial-free part.
struct MonomialSplit {
    int alpha;
    int beta;
    BiPoly rest;
};

MonomialSplit split_monomial(const BiPoly& p) {
    int min_a = INT32_MAX;
    int min_b = INT32_MAX;
    for (const auto& [e, c] : p.terms()) {
        min_a = std::min(min_a, e.alpha);
        min_b = std::min(min_b, e.beta);
    }
    BiPoly rest;
    for (const auto& [e, c] : p.terms()) rest.set_coeff(e.alpha - min_a, e.beta - min_b, c);
    return {min_a, min_b, rest};
}

bool uses_only(const BiPoly& p, bool allow_alpha, bool allow_beta) {
    for (const auto& [e, c] : p.terms()) {
        if (!allow_alpha && e.alpha > 0) return false;
        if (!allow_beta && e.beta > 0) return false;
    }
    return true;
}

// Treats p as univariate in alpha (swap = false) or beta (swap = true).
UniPoly to_single_var(const BiPoly& p, bool swap) {
    UniPoly out;
    for (const auto& [e, coeff] : p.terms()) {
        int k = swap ? e.beta : e.alpha;
        if (out.c.size() < static_cast<std::size_t>(k + 1)) out.c.resize(k + 1, QElem());
        out.c[k] = coeff;
    }
    out.trim();
    return out;
}

BiPoly from_single_var(const UniPoly& u, bool swap) {
    BiPoly out;
    for (int i = 0; i <= u.deg(); ++i) {
        if (u.c[i].is_zero()) continue;
        out.set_coeff(swap ? 0 : i, swap ? i : 0, u.c[i]);
    }
    return out;
}

}  // namespace

BiPoly poly_gcd(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() && q.is_zero()) throw ContractError("poly_gcd: gcd(0, 0) undefined");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_homogeneous() && q.is_homogeneous()) return gcd_homogeneous(p, q);

    // Display-only fallback for non-homogeneous inputs: the shared monomial
    // factor, refined by a univariate Euclid when both primitive parts live
    // in the same single variable.
    MonomialSplit sp = split_monomial(p);
    MonomialSplit sq = split_monomial(q);
    BiPoly mono = BiPoly::monomial(std::min(sp.alpha, sq.alpha), std::min(sp.beta, sq.beta),
                                   QElem(Rat(1)));
    for (bool swap : {false, true}) {
        if (uses_only(sp.rest, !swap, swap) && uses_only(sq.rest, !swap, swap)) {
            UniPoly g = uni_gcd(to_single_var(sp.rest, swap), to_single_var(sq.rest, swap));
            return mono * from_single_var(g, swap);
        }
    }
    return mono;
}

std::optional<BiPoly> try_divide(const BiPoly& p, const BiPoly& q) {
    if (q.is_zero()) throw DivisionError("try_divide: division by the zero polynomial");
    BiPoly rem = p;
    BiPoly quot;
    ExpPair lq = q.leading_exponents();
    const QElem& lc = q.leading_coeff();
    while (!rem.is_zero()) {
        ExpPair lr = rem.leading_exponents();
        // The term order is multiplicative, so q | rem forces LT(q) | LT(rem).
        if (lr.alpha < lq.alpha || lr.beta < lq.beta) return std::nullopt;
        BiPoly t = BiPoly::monomial(lr.alpha - lq.alpha, lr.beta - lq.beta,
                                    rem.leading_coeff() / lc);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

BiPoly divide_exact(const BiPoly& p, const BiPoly& q) {
    auto quot = try_divide(p, q);
    if (!quot)
        throw DivisibilityError("divide_exact: " + q.to_string() + " does not divide " +
                                p.to_string());
    return *quot;
}

}  // namespace bidiff
