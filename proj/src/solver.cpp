#include "bidiff/solver.hpp"

#include <algorithm>
#include <numeric>

namespace bidiff {

namespace {

constexpr int kWitnessScanCap = 32;

std::vector<ExpPair> monomials_of_degree(int d) {
    std::vector<ExpPair> out;
    out.reserve(d + 1);
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
    return out;
}

BiPoly poly_from_coords(const std::vector<ExpPair>& monos, const QVector& coords) {
    BiPoly out;
    for (std::size_t k = 0; k < monos.size(); ++k)
        out.set_coeff(monos[k].alpha, monos[k].beta, coords[k]);
    return out;
}

// Canonical unknown order: columns follow the term order (total-degree lex,
// alpha > beta, descending), which fixes the free-variable convention.
void canonicalize_monos(std::vector<ExpPair>& monos) {
    std::sort(monos.begin(), monos.end(), TermOrderDesc{});
}

// The affine system for a*sigma(g) + b*g = f over the given unknown
// monomials; rows are indexed by every monomial reachable from the columns
// or present in f.
AffineSolution solve_equation_over(const BiPoly& a, const BiPoly& b, const BiPoly& f,
                                   const DiffField& fld, const std::vector<ExpPair>& monos) {
    std::vector<BiPoly> columns;
    columns.reserve(monos.size());
    std::map<ExpPair, std::size_t, TermOrderDesc> row_index;
    auto touch = [&row_index](const BiPoly& p) {
        for (const auto& [e, c] : p.terms()) row_index.emplace(e, 0);
    };
    for (const ExpPair& m : monos) {
        BiPoly basis = BiPoly::monomial(m.alpha, m.beta, QElem(Rat(1)));
        BiPoly col = a * fld.sigma_pow(basis, 1) + b * basis;
        touch(col);
        columns.push_back(std::move(col));
    }
    touch(f);
    std::size_t r = 0;
    for (auto& [e, idx] : row_index) idx = r++;

    // Every column may be identically zero (e.g. sigma(c) - c over the
    // constants); keep one zero row so the unknown count survives.
    std::size_t nrows = std::max<std::size_t>(row_index.size(), 1);
    QMatrix matrix(nrows, QVector(monos.size()));
    QVector rhs(nrows);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [e, coeff] : columns[c].terms()) matrix[row_index.at(e)][c] = coeff;
    for (const auto& [e, coeff] : f.terms()) rhs[row_index.at(e)] = coeff;
    return linsolve(std::move(matrix), std::move(rhs));
}

// Peels all eigenform factors off a homogeneous polynomial, counting the
// multiplicities; the returned cofactor is coprime to both eigenforms.
BiPoly split_eigen_factors(const BiPoly& p, const DiffField& fld, int& mult_h1, int& mult_h2) {
    BiPoly rest = p;
    mult_h1 = 0;
    mult_h2 = 0;
    while (auto q = try_divide(rest, fld.h1())) {
        rest = *q;
        ++mult_h1;
    }
    while (auto q = try_divide(rest, fld.h2())) {
        rest = *q;
        ++mult_h2;
    }
    return rest;
}

// One linear constraint base + k*coef >= bound on the coset parameter k.
struct KInterval {
    long lo;
    bool lo_bounded = false;
    long hi;
    bool hi_bounded = false;
    bool empty = false;

    void require_at_least(long base, long coef, long bound) {
        if (empty) return;
        if (coef == 0) {
            if (base < bound) empty = true;
            return;
        }
        // base + k*coef >= bound
        if (coef > 0) {
            long need = bound - base;
            long k = need <= 0 ? -((-need) / coef) : (need + coef - 1) / coef;
            if (!lo_bounded || k > lo) lo = k;
            lo_bounded = true;
        } else {
            long need = base - bound;  // k*(-coef) <= base - bound
            long c = -coef;
            if (need < 0) {
                empty = true;
                return;
            }
            long k = need / c;
            if (!hi_bounded || k < hi) hi = k;
            hi_bounded = true;
        }
        if (lo_bounded && hi_bounded && lo > hi) empty = true;
    }
};

}  // namespace

bool SupportSet::member(int d) const {
    if (std::binary_search(finite.begin(), finite.end(), d)) return true;
    if (progression) {
        auto [d0, delta] = *progression;
        return d >= d0 && (d - d0) % delta == 0;
    }
    return false;
}

std::vector<int> SupportSet::members_up_to(int cap) const {
    std::vector<int> out;
    for (int d : finite)
        if (d <= cap) out.push_back(d);
    if (progression) {
        auto [d0, delta] = *progression;
        for (int d = d0; d <= cap; d += delta) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int SupportSet::max_member_up_to(int cap) const {
    std::vector<int> m = members_up_to(cap);
    return m.empty() ? -1 : m.back();
}

SupportSet intersect(const SupportSet& a, const SupportSet& b) {
    SupportSet out;
    for (int d : a.finite)
        if (b.member(d)) out.finite.push_back(d);
    for (int d : b.finite)
        if (a.member(d) && !out.member(d)) out.finite.push_back(d);
    std::sort(out.finite.begin(), out.finite.end());
    out.finite.erase(std::unique(out.finite.begin(), out.finite.end()), out.finite.end());
    if (a.progression && b.progression) {
        auto [da, qa] = *a.progression;
        auto [db, qb] = *b.progression;
        long g = std::gcd(qa, qb);
        if ((da - db) % g == 0) {
            long lcm = static_cast<long>(qa) / g * qb;
            // First d >= max(da, db) with d = da (mod qa) and d = db (mod qb).
            long d = da;
            while (d < db || (d - db) % qb != 0) d += qa;
            out.progression = {static_cast<int>(d), static_cast<int>(lcm)};
        }
    }
    return out;
}

std::pair<SupportSet, StripResult> support_set(const BiPoly& a_n, const BiPoly& b_n,
                                               const DiffField& fld) {
    if (a_n.is_zero() || b_n.is_zero())
        throw ContractError("support_set: leading forms must be nonzero");
    if (!a_n.is_homogeneous() || !b_n.is_homogeneous())
        throw ContractError("support_set: leading forms must be homogeneous");
    if (a_n.degree_nonzero() != b_n.degree_nonzero())
        throw ContractError("support_set: leading forms must have equal degree");

    StripResult sr = strip(a_n, b_n, fld);
    SupportSet support;
    if (!sr.ratio) return {support, sr};  // non-constant reduced pair: no kernel degrees

    // Every homogeneous kernel element satisfies sigma(g*t/h)/(g*t/h) = ratio
    // exactly, so g*t/h is an eigenform monomial c*h1^i*h2^j with
    // lambda1^i * lambda2^j = ratio, i.e. g = c * h1^i * h2^j * h / t. That
    // expression is a polynomial iff the non-eigen part of t divides the
    // non-eigen part of h and the eigen exponents of t are covered; this
    // pins the admissible degrees exactly, with explicit witnesses.
    int t1, t2, h1m, h2m;
    BiPoly t_rest = split_eigen_factors(sr.t, fld, t1, t2);
    BiPoly h_rest = split_eigen_factors(sr.h, fld, h1m, h2m);
    if (!try_divide(h_rest, t_rest)) return {support, sr};
    const long min_i = t1 - h1m;
    const long min_j = t2 - h2m;

    ExpSolSet sols = solve_unit_eq(*sr.ratio, fld);
    int deg_t = sr.t.degree_nonzero();
    int deg_h = sr.h.degree_nonzero();
    auto degree_of = [&](long i, long j) {
        long d = i + j + deg_h - deg_t;
        if (d < 0) throw Error("support_set: witnessed degree is negative (internal bug)");
        return static_cast<int>(d);
    };

    switch (sols.kind) {
        case ExpSolSet::Kind::Empty:
            break;
        case ExpSolSet::Kind::Single:
            if (sols.i0 >= min_i && sols.j0 >= min_j)
                support.finite.push_back(degree_of(sols.i0, sols.j0));
            break;
        case ExpSolSet::Kind::Coset: {
            KInterval ks;
            ks.require_at_least(sols.i0, sols.step_i, min_i);
            ks.require_at_least(sols.j0, sols.step_j, min_j);
            if (ks.empty) break;
            if (!ks.lo_bounded)
                throw Error("support_set: candidate parameter unbounded below (internal bug)");
            long delta = sols.step_i + sols.step_j;
            auto d_at = [&](long k) {
                return degree_of(sols.i0 + k * sols.step_i, sols.j0 + k * sols.step_j);
            };
            if (ks.hi_bounded) {
                for (long k = ks.lo; k <= ks.hi; ++k) support.finite.push_back(d_at(k));
                std::sort(support.finite.begin(), support.finite.end());
            } else {
                support.finite.push_back(d_at(ks.lo));
                support.progression = {d_at(ks.lo), static_cast<int>(delta)};
            }
            break;
        }
    }
    return {support, sr};
}

std::optional<BiPoly> particular_solution(const BiPoly& a, const BiPoly& b, const BiPoly& f,
                                          const DiffField& fld, const SupportSet& support) {
    (void)support;
    if (a.is_zero() && b.is_zero()) throw ContractError("particular_solution: a = b = 0");
    if (f.is_zero()) throw ContractError("particular_solution: f must be nonzero");
    int dstar = f.degree_nonzero() -
                std::max(a.is_zero() ? 0 : a.degree_nonzero(), b.is_zero() ? 0 : b.degree_nonzero());
    if (dstar < 0) return std::nullopt;
    std::vector<ExpPair> monos;
    for (int d = 0; d <= dstar; ++d)
        for (ExpPair m : monomials_of_degree(d)) monos.push_back(m);
    canonicalize_monos(monos);
    AffineSolution sol = solve_equation_over(a, b, f, fld, monos);
    if (!sol.particular) return std::nullopt;
    return poly_from_coords(monos, *sol.particular);
}

bool verify_solution(const BiPoly& a, const BiPoly& b, const BiPoly& f, const BiPoly& g,
                     const DiffField& fld) {
    return (a * fld.sigma_pow(g, 1) + b * g - f).is_zero();
}

namespace {

// Kernel basis over the admissible degrees <= cap, each element monic and
// substitution-verified.
std::vector<BiPoly> kernel_basis_over(const BiPoly& a, const BiPoly& b, const DiffField& fld,
                                      const SupportSet& support, int cap) {
    std::vector<ExpPair> monos;
    for (int d : support.members_up_to(cap))
        for (ExpPair m : monomials_of_degree(d)) monos.push_back(m);
    if (monos.empty()) return {};
    canonicalize_monos(monos);
    AffineSolution sol = solve_equation_over(a, b, BiPoly(), fld, monos);
    std::vector<BiPoly> basis;
    for (const QVector& vec : sol.nullspace_basis) {
        BiPoly k = poly_from_coords(monos, vec).monic();
        if (!verify_solution(a, b, BiPoly(), k, fld))
            throw Error("kernel element failed the substitution check (internal bug)");
        basis.push_back(std::move(k));
    }
    return basis;
}

struct SupportInfo {
    SupportSet support;
    bool pruned_any = false;
};

SupportInfo compute_support(const BiPoly& a, const BiPoly& b, const DiffField& fld,
                            bool component_pruning) {
    SupportInfo info;
    int da = a.degree_nonzero();
    int db = b.degree_nonzero();
    if (da != db) return info;  // only g = 0
    info.support = support_set(hom_component(a, da), hom_component(b, db), fld).first;
    if (!component_pruning) return info;
    for (int i = 0; i < da; ++i) {
        BiPoly ai = hom_component(a, i);
        BiPoly bi = hom_component(b, i);
        if (ai.is_zero() || bi.is_zero()) continue;
        SupportSet si = support_set(ai, bi, fld).first;
        SupportSet refined = intersect(info.support, si);
        if (!(refined.finite == info.support.finite &&
              refined.progression == info.support.progression))
            info.pruned_any = true;
        info.support = refined;
    }
    return info;
}

// The kernel-degree progression never ends, so any finite cap leaves an
// infinite family; describe it through the sigma-invariant generators.
void attach_family_note(SolutionSet& out, const DiffField& fld);

std::string describe_support(const SupportSet& s) {
    std::string out = "{";
    bool first = true;
    for (int d : s.finite) {
        if (!first) out += ", ";
        out += std::to_string(d);
        first = false;
    }
    if (s.progression) {
        if (!first) out += ", ";
        out += std::to_string(s.progression->first) + " + " +
               std::to_string(s.progression->second) + "k";
        first = false;
    }
    return out + "}";
}

void attach_family_note(SolutionSet& out, const DiffField& fld) {
    if (!out.support.progression) return;
    out.invariant_gens = invariant_generators(fld, out.support.progression->second);
    out.family_note =
        "kernel degrees continue as " + describe_support(out.support) +
        "; multiplying any kernel element by a sigma-invariant polynomial stays in the kernel";
}

}  // namespace

SolutionSet solve_homogeneous(const BiPoly& a, const BiPoly& b, const DiffField& fld, int cap) {
    if (a.is_zero() || b.is_zero()) throw ContractError("solve_homogeneous: a, b must be nonzero");
    SolutionSet out;
    out.cap_used = cap;
    SupportInfo info = compute_support(a, b, fld, false);
    out.support = info.support;
    out.kernel_basis = kernel_basis_over(a, b, fld, out.support, cap);
    attach_family_note(out, fld);
    return out;
}

SolutionSet solve_full(const BiPoly& a, const BiPoly& b, const BiPoly& f, const DiffField& fld,
                       int cap, bool component_pruning) {
    if (a.is_zero() || b.is_zero()) throw ContractError("solve_full: a, b must be nonzero");
    SolutionSet out;
    SupportInfo info = compute_support(a, b, fld, component_pruning);
    out.support = info.support;
    if (info.pruned_any) {
        out.complete_up_to_cap = false;
        out.diagnostics.push_back(
            "component pruning narrowed the kernel support; results remain "
            "substitution-verified but completeness is not guaranteed");
    }

    int dstar = -1;
    if (!f.is_zero())
        dstar = f.degree_nonzero() - std::max(a.degree_nonzero(), b.degree_nonzero());

    if (cap < 0) {
        cap = std::max(dstar, 0);
        cap = std::max(cap, out.support.max_member_up_to(32));
        if (out.support.progression)
            cap = std::max(cap,
                           out.support.progression->first + 2 * out.support.progression->second);
    }
    out.cap_used = cap;

    out.kernel_basis = kernel_basis_over(a, b, fld, out.support, cap);
    attach_family_note(out, fld);

    if (f.is_zero()) {
        out.particular = BiPoly();
    } else if (dstar < 0) {
        out.diagnostics.push_back("deg f < max(deg a, deg b): no polynomial solution candidate");
    } else {
        out.particular = particular_solution(a, b, f, fld, out.support);
        if (!out.particular) {
            // The undetermined-coefficient system at d* is inconsistent. Any
            // higher-degree solution must lead with a kernel-support degree,
            // so retry over those monomials before reporting failure.
            int dmax = out.support.max_member_up_to(cap);
            if (dmax > dstar) {
                std::vector<ExpPair> monos;
                for (int d = 0; d <= dmax; ++d)
                    for (ExpPair m : monomials_of_degree(d)) monos.push_back(m);
                canonicalize_monos(monos);
                AffineSolution sol = solve_equation_over(a, b, f, fld, monos);
                if (sol.particular) {
                    out.particular = poly_from_coords(monos, *sol.particular);
                    out.diagnostics.push_back(
                        "particular solution found only above the generic degree bound deg f - "
                        "max(deg a, deg b)");
                }
            }
        }
        if (!out.particular)
            out.diagnostics.push_back(
                "no polynomial solution at degree " + std::to_string(dstar) +
                " (kernel support " + describe_support(out.support) +
                "); retry with a larger --cap to search higher degrees");
    }

    if (out.particular && !verify_solution(a, b, f, *out.particular, fld))
        throw Error("particular solution failed the substitution check (internal bug)");
    return out;
}

}  // namespace bidiff
