#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bidiff/difffield.hpp"
#include "bidiff/parser.hpp"
#include "testutil.hpp"

using namespace bidiff;

namespace {
BiPoly P(const std::string& s) { return parse_expr(s); }

const DiffField& fib() {
    static DiffField f = make_field(Rat(1), Rat(1));
    return f;
}
const DiffField& pell() {
    static DiffField f = make_field(Rat(1), Rat(2));
    return f;
}
const DiffField& jacobsthal() {
    static DiffField f = make_field(Rat(2), Rat(1));
    return f;
}
}  // namespace

TEST_CASE("make_field golden values") {
    CHECK(fib().lambda1() == QElem(Rat(1, 2), Rat(1, 2), Rat(5)));
    CHECK(fib().lambda2() == QElem(Rat(1, 2), Rat(-1, 2), Rat(5)));
    CHECK(fib().h1() == BiPoly::alpha() + QElem(Rat(1, 2), Rat(1, 2), Rat(5)) * BiPoly::beta());
    CHECK(fib().norm_form() == P("alpha^2 + alpha*beta - beta^2"));

    CHECK(pell().D() == 8);
    CHECK(pell().lambda1() == QElem(Rat(1), Rat(1, 2), Rat(8)));  // 1 + sqrt(2)
    CHECK(pell().lambda2() == QElem(Rat(1), Rat(-1, 2), Rat(8)));

    CHECK(jacobsthal().D() == 9);
    CHECK(jacobsthal().lambda1() == QElem(Rat(2)));
    CHECK(jacobsthal().lambda2() == QElem(Rat(-1)));
}

TEST_CASE("make_field rejections") {
    CHECK_THROWS_AS(make_field(Rat(0), Rat(1)), FieldConstructionError);   // degenerate
    CHECK_THROWS_AS(make_field(Rat(-1), Rat(2)), FieldConstructionError);  // D = 0
    CHECK_THROWS_AS(make_field(Rat(-1), Rat(1)), FieldConstructionError);  // D < 0
    CHECK_THROWS_AS(make_field(Rat(1), Rat(0)), FieldConstructionError);   // ratio -1
}

TEST_CASE("eigen structure of every field") {
    for (const DiffField* fld : {&fib(), &pell(), &jacobsthal()}) {
        CHECK(fld->sigma_pow(fld->h1(), 1) == fld->lambda1() * fld->h1());
        CHECK(fld->sigma_pow(fld->h2(), 1) == fld->lambda2() * fld->h2());
        CHECK(fld->lambda1() * fld->lambda2() == QElem(-fld->u()));
        CHECK(fld->lambda1() + fld->lambda2() == QElem(fld->v()));
        CHECK(fld->h1() * fld->h2() == fld->norm_form());
        CHECK(fld->sigma_pow(fld->norm_form(), 1) == QElem(-fld->u()) * fld->norm_form());
    }
}

TEST_CASE("relation lattices") {
    CHECK(fib().lattice().rank == 1);
    CHECK(fib().lattice().a0 == 2);
    CHECK(fib().lattice().b0 == 2);
    CHECK(pell().lattice().rank == 1);
    CHECK(pell().lattice().a0 == 2);
    CHECK(pell().lattice().b0 == 2);
    CHECK(jacobsthal().lattice().rank == 1);
    CHECK(jacobsthal().lattice().a0 == 0);
    CHECK(jacobsthal().lattice().b0 == 2);
    // |lambda1*lambda2| != 1 and irrational sqrt(D): no relation at all.
    DiffField f23 = make_field(Rat(2), Rat(3));  // D = 17
    CHECK(f23.lattice().rank == 0);
}

TEST_CASE("to_eigen golden values") {
    QVector e = to_eigen(P("beta^2"), fib());
    REQUIRE(e.size() == 3);
    CHECK(e[0] == QElem(Rat(1, 5)));
    CHECK(e[1] == QElem(Rat(-2, 5)));
    CHECK(e[2] == QElem(Rat(1, 5)));

    QVector c = to_eigen(P("alpha^2 + alpha*beta - beta^2"), fib());
    CHECK(c[0].is_zero());
    CHECK(c[1] == QElem(Rat(1)));
    CHECK(c[2].is_zero());

    QVector h13 = to_eigen(fib().h1().pow(3), fib());
    CHECK(h13[3] == QElem(Rat(1)));
    CHECK(h13[0].is_zero());
    CHECK(h13[1].is_zero());
    CHECK(h13[2].is_zero());

    CHECK_THROWS_AS(to_eigen(P("alpha^2 + beta"), fib()), ContractError);
}

TEST_CASE("from_eigen golden values") {
    QVector c = {QElem(), QElem(Rat(1)), QElem()};
    CHECK(from_eigen(c, fib()) == P("alpha^2 + alpha*beta - beta^2"));
    CHECK(from_eigen({QElem(Rat(1))}, fib()) == BiPoly(Rat(1)));
    CHECK(from_eigen({QElem(), QElem(), QElem()}, fib()).is_zero());
}

TEST_CASE("to_eigen and from_eigen invert each other; sigma is diagonal") {
    testutil::Rng rng(47);
    for (const DiffField* fld : {&fib(), &pell(), &jacobsthal()}) {
        for (int iter = 0; iter < 40; ++iter) {
            std::uniform_int_distribution<int> deg(0, 8);
            int d = deg(rng);
            BiPoly p = testutil::random_nonzero_homogeneous(rng, d);
            QVector e = to_eigen(p, *fld);
            CHECK(from_eigen(e, *fld) == p);
            QVector es = to_eigen(fld->sigma_pow(p, 1), *fld);
            for (int k = 0; k <= d; ++k)
                CHECK(es[k] == fld->lambda_power(k, d - k) * e[k]);
        }
    }
}

TEST_CASE("classify_semi_invariant golden values") {
    auto c = classify_semi_invariant(P("alpha^2 + alpha*beta - beta^2"), BiPoly(Rat(1)), fib());
    REQUIRE(c.has_value());
    CHECK(c->first == QElem(Rat(-1)));
    CHECK(c->second == 1);

    CHECK(!classify_semi_invariant(P("beta"), BiPoly(Rat(1)), fib()).has_value());

    for (const DiffField* fld : {&fib(), &pell(), &jacobsthal()}) {
        auto r = classify_semi_invariant(fld->h1().pow(2), fld->h2(), *fld);
        REQUIRE(r.has_value());
        CHECK(r->first == fld->lambda1().pow(2) / fld->lambda2());
        CHECK(r->second == 2);
    }
}

TEST_CASE("classify agrees with the direct cross-multiplied check") {
    testutil::Rng rng(53);
    for (const DiffField* fld : {&fib(), &pell(), &jacobsthal()}) {
        for (int iter = 0; iter < 60; ++iter) {
            std::uniform_int_distribution<int> deg(0, 3);
            BiPoly p = testutil::random_nonzero_homogeneous(rng, deg(rng));
            BiPoly q = testutil::random_nonzero_homogeneous(rng, deg(rng));
            auto r = classify_semi_invariant(p, q, *fld);
            if (!r) continue;
            auto [mu, i] = *r;
            CHECK(fld->sigma_pow(p, 1) * q == mu * (p * fld->sigma_pow(q, 1)));
            long dp = p.degree_nonzero(), dq = q.degree_nonzero();
            CHECK(mu == fld->lambda_power(i, dp - dq - i));
            CHECK(i >= -dq);
            CHECK(i <= dp);
        }
    }
}

TEST_CASE("eigenform monomials round-trip through classify") {
    testutil::Rng rng(59);
    for (const DiffField* fld : {&fib(), &pell(), &jacobsthal()}) {
        for (int iter = 0; iter < 40; ++iter) {
            std::uniform_int_distribution<int> deg(0, 4);
            int i = deg(rng), j = deg(rng);
            QElem c(testutil::random_nonzero_rat(rng));
            BiPoly p = c * (fld->h1().pow(i) * fld->h2().pow(j));
            auto r = classify_semi_invariant(p, BiPoly(Rat(1)), *fld);
            REQUIRE(r.has_value());
            CHECK(r->second == i);
            CHECK(r->first == fld->lambda_power(i, j));
        }
    }
}

TEST_CASE("solve_unit_eq golden values") {
    ExpSolSet fib1 = solve_unit_eq(QElem(Rat(1)), fib());
    CHECK(fib1.kind == ExpSolSet::Kind::Coset);
    CHECK(fib1.contains(0, 0));
    CHECK(fib1.contains(2, 2));
    CHECK(fib1.contains(-2, -2));
    CHECK(!fib1.contains(1, 1));
    CHECK(fib1.step_i == 2);
    CHECK(fib1.step_j == 2);

    CHECK(solve_unit_eq(QElem(Rat(-2)), pell()).kind == ExpSolSet::Kind::Empty);

    ExpSolSet pm1 = solve_unit_eq(QElem(Rat(-1)), pell());
    CHECK(pm1.kind == ExpSolSet::Kind::Coset);
    CHECK(pm1.contains(1, 1));
    CHECK(pm1.contains(3, 3));
    CHECK(pm1.contains(-1, -1));
    CHECK(!pm1.contains(0, 0));
    CHECK(!pm1.contains(2, 2));

    // Rational branch: 2^i * (-1)^j = 8 forces i = 3, j even -> coset.
    ExpSolSet j8 = solve_unit_eq(QElem(Rat(8)), jacobsthal());
    CHECK(j8.kind == ExpSolSet::Kind::Coset);
    CHECK(j8.contains(3, 0));
    CHECK(j8.contains(3, 2));
    CHECK(!j8.contains(3, 1));
    CHECK(!j8.contains(2, 0));

    // No relation lattice: unique solutions or nothing.
    DiffField f23 = make_field(Rat(2), Rat(3));
    ExpSolSet one = solve_unit_eq(QElem(Rat(1)), f23);
    CHECK(one.kind == ExpSolSet::Kind::Single);
    CHECK(one.contains(0, 0));
    ExpSolSet lam = solve_unit_eq(f23.lambda1() * f23.lambda1() * f23.lambda2(), f23);
    CHECK(lam.kind == ExpSolSet::Kind::Single);
    CHECK(lam.contains(2, 1));

    CHECK_THROWS_AS(solve_unit_eq(QElem(), fib()), ContractError);
}

TEST_CASE("solve_unit_eq is sound and complete against brute force") {
    testutil::Rng rng(61);
    std::uniform_int_distribution<int> exp(-6, 6);
    for (const DiffField* fld : {&fib(), &pell(), &jacobsthal()}) {
        for (int iter = 0; iter < 40; ++iter) {
            QElem mu = fld->lambda_power(exp(rng), exp(rng));
            if (iter % 4 == 0) mu *= QElem(Rat(iter % 3 + 2));  // usually unsolvable
            ExpSolSet sol = solve_unit_eq(mu, *fld);
            for (long i = -20; i <= 20; ++i)
                for (long j = -20; j <= 20; ++j) {
                    bool truth = fld->lambda_power(i, j) == mu;
                    CHECK(sol.contains(i, j) == truth);
                }
        }
    }
}

TEST_CASE("invariant_generators golden values") {
    std::vector<BiPoly> fg = invariant_generators(fib(), 4);
    REQUIRE(fg.size() == 2);
    CHECK(fg[0] == BiPoly(Rat(1)));
    CHECK(fg[1] == P("alpha^2 + alpha*beta - beta^2").pow(2));

    std::vector<BiPoly> pg = invariant_generators(pell(), 3);
    REQUIRE(pg.size() == 1);
    CHECK(pg[0] == BiPoly(Rat(1)));

    std::vector<BiPoly> zg = invariant_generators(jacobsthal(), 0);
    REQUIRE(zg.size() == 1);
    CHECK(zg[0] == BiPoly(Rat(1)));
}

TEST_CASE("invariant generators are sigma-fixed") {
    for (const DiffField* fld : {&fib(), &pell(), &jacobsthal()}) {
        for (const BiPoly& w : invariant_generators(*fld, 6))
            CHECK(fld->sigma_pow(w, 1) == w);
    }
}
