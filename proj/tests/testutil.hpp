#pragma once

// Shared helpers for the test suites: deterministic random generators for
// rationals, field elements, and polynomials, plus the dense brute-force
// solver used as the independent oracle against the support-set machinery.

#include <random>
#include <vector>

#include "bidiff/difffield.hpp"
#include "bidiff/linalg.hpp"
#include "bidiff/parser.hpp"
#include "bidiff/solver.hpp"

namespace bidiff::testutil {

using Rng = std::mt19937;

inline Rat random_rat(Rng& rng, int num_range = 9, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Rat random_nonzero_rat(Rng& rng, int num_range = 9, int den_range = 3) {
    for (;;) {
        Rat r = random_rat(rng, num_range, den_range);
        if (r != 0) return r;
    }
}

inline QElem random_qelem(Rng& rng, const Rat& D) {
    return QElem(random_rat(rng), random_rat(rng), D);
}

inline BiPoly random_poly(Rng& rng, int max_degree, double keep_prob = 0.6) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    BiPoly p;
    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j)
            if (coin(rng) < keep_prob) p.set_coeff(i, j, QElem(random_rat(rng)));
    return p;
}

inline BiPoly random_nonzero_poly(Rng& rng, int max_degree) {
    for (;;) {
        BiPoly p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

inline BiPoly random_homogeneous(Rng& rng, int degree, double keep_prob = 0.7) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    BiPoly p;
    for (int i = 0; i <= degree; ++i)
        if (coin(rng) < keep_prob) p.set_coeff(i, degree - i, QElem(random_rat(rng)));
    return p;
}

inline BiPoly random_nonzero_homogeneous(Rng& rng, int degree) {
    for (;;) {
        BiPoly p = random_homogeneous(rng, degree);
        if (!p.is_zero()) return p;
    }
}

// All monomials of total degree <= cap, in the canonical term order.
inline std::vector<ExpPair> dense_monomials(int cap) {
    std::vector<ExpPair> out;
    for (int d = cap; d >= 0; --d)
        for (int i = d; i >= 0; --i) out.push_back({i, d - i});
    return out;
}

// Independent dense oracle: solves a*sigma(g) + b*g = f over ALL monomials of
// degree <= cap by plain undetermined coefficients, ignoring support sets,
// stripping, and unit equations entirely.
struct DenseSolution {
    std::optional<BiPoly> particular;
    std::vector<BiPoly> kernel;
};

inline DenseSolution dense_solve(const BiPoly& a, const BiPoly& b, const BiPoly& f,
                                 const DiffField& fld, int cap) {
    std::vector<ExpPair> monos = dense_monomials(cap);
    std::map<ExpPair, std::size_t, TermOrderDesc> rows;
    std::vector<BiPoly> cols;
    for (ExpPair m : monos) {
        BiPoly basis = BiPoly::monomial(m.alpha, m.beta, QElem(Rat(1)));
        BiPoly col = a * fld.sigma_pow(basis, 1) + b * basis;
        for (const auto& [e, c] : col.terms()) rows.emplace(e, 0);
        cols.push_back(std::move(col));
    }
    for (const auto& [e, c] : f.terms()) rows.emplace(e, 0);
    std::size_t r = 0;
    for (auto& [e, idx] : rows) idx = r++;
    std::size_t nrows = std::max<std::size_t>(rows.size(), 1);
    QMatrix matrix(nrows, QVector(monos.size()));
    QVector rhs(nrows);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [e, coeff] : cols[c].terms()) matrix[rows.at(e)][c] = coeff;
    for (const auto& [e, coeff] : f.terms()) rhs[rows.at(e)] = coeff;
    AffineSolution sol = linsolve(std::move(matrix), std::move(rhs));

    DenseSolution out;
    if (sol.particular) {
        BiPoly p;
        for (std::size_t k = 0; k < monos.size(); ++k)
            p.set_coeff(monos[k].alpha, monos[k].beta, (*sol.particular)[k]);
        out.particular = p;
    }
    for (const QVector& vec : sol.nullspace_basis) {
        BiPoly p;
        for (std::size_t k = 0; k < monos.size(); ++k)
            p.set_coeff(monos[k].alpha, monos[k].beta, vec[k]);
        out.kernel.push_back(p);
    }
    return out;
}

// Do two families of polynomials span the same subspace of the dense
// coefficient space of degree <= cap?
inline bool same_span(const std::vector<BiPoly>& xs, const std::vector<BiPoly>& ys, int cap) {
    std::vector<ExpPair> monos = dense_monomials(cap);
    auto coords = [&](const BiPoly& p) {
        QVector v;
        v.reserve(monos.size());
        for (ExpPair m : monos) v.push_back(p.coeff(m.alpha, m.beta));
        return v;
    };
    QMatrix mx, my, both;
    for (const BiPoly& p : xs) {
        mx.push_back(coords(p));
        both.push_back(coords(p));
    }
    for (const BiPoly& p : ys) {
        my.push_back(coords(p));
        both.push_back(coords(p));
    }
    std::size_t rx = mx.empty() ? 0 : rank(mx);
    std::size_t ry = my.empty() ? 0 : rank(my);
    std::size_t rb = both.empty() ? 0 : rank(both);
    return rx == ry && ry == rb;
}

}  // namespace bidiff::testutil
