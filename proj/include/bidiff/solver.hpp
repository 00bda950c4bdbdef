#pragma once

/**
 * Polynomial solutions of a*sigma(g) + b*g = f.
 *
 * The kernel (f = 0) is located degree by degree: stripping the leading
 * homogeneous pair yields a constant ratio, the unit equation
 * lambda1^i * lambda2^j = -b/a turns that into candidate degrees
 * d = i + j + deg h - deg t, and every candidate is confirmed by an exact
 * linear solve before it is reported. A rank-1 relation lattice makes the
 * candidate set an arithmetic progression; once one degree of the
 * progression carries a witness, the whole tail does (multiply by the
 * sigma-invariant h1^a0 * h2^b0), so the support is reported as a finite
 * list plus an optional progression.
 *
 * Particular solutions come from the exact undetermined-coefficient system
 * over all monomials up to deg f - max(deg a, deg b), with a bounded retry
 * over admissible kernel-support degrees when that system is inconsistent.
 */

#include <optional>
#include <string>
#include <vector>

#include "bidiff/spread.hpp"

namespace bidiff {

// Admissible kernel-component degrees: a finite sorted list plus an optional
// arithmetic progression (d0, delta), membership being the union of the two.
struct SupportSet {
    std::vector<int> finite;
    std::optional<std::pair<int, int>> progression;

    bool member(int d) const;
    bool is_empty() const { return finite.empty() && !progression; }
    std::vector<int> members_up_to(int cap) const;
    int max_member_up_to(int cap) const;  // -1 when none
};

SupportSet intersect(const SupportSet& a, const SupportSet& b);

// Runs strip on the (equal-degree, homogeneous, nonzero) leading pair and
// maps the unit-equation solutions to confirmed kernel degrees.
std::pair<SupportSet, StripResult> support_set(const BiPoly& a_n, const BiPoly& b_n,
                                               const DiffField& fld);

struct SolutionSet {
    std::optional<BiPoly> particular;
    std::vector<BiPoly> kernel_basis;
    std::optional<std::string> family_note;
    std::vector<BiPoly> invariant_gens;
    SupportSet support;
    int cap_used = 0;
    bool complete_up_to_cap = true;
    std::vector<std::string> diagnostics;
};

// All solutions of a*sigma(g) + b*g = 0 with degree at most cap.
SolutionSet solve_homogeneous(const BiPoly& a, const BiPoly& b, const DiffField& fld, int cap);

// One solution of a*sigma(g) + b*g = f of degree at most
// deg f - max(deg a, deg b), free coordinates zeroed; absent when the system
// at that degree is inconsistent. The support parameter mirrors the caller's
// kernel knowledge and is not needed for the search itself.
std::optional<BiPoly> particular_solution(const BiPoly& a, const BiPoly& b, const BiPoly& f,
                                          const DiffField& fld, const SupportSet& support);

// Particular + kernel basis, every element re-verified by substitution.
// cap < 0 selects the default cap; component_pruning additionally intersects
// the support with every homogeneous component pair of (a, b).
SolutionSet solve_full(const BiPoly& a, const BiPoly& b, const BiPoly& f, const DiffField& fld,
                       int cap = -1, bool component_pruning = false);

// Exact check of a*sigma(g) + b*g == f.
bool verify_solution(const BiPoly& a, const BiPoly& b, const BiPoly& f, const BiPoly& g,
                     const DiffField& fld);

}  // namespace bidiff
