#pragma once

/**
 * Spread sets and the two-phase stripping loop.
 *
 * Spr(p, q) = { m >= 0 : deg gcd(p, sigma^m q) > 0 } for coprime homogeneous
 * p, q. It is finite: in eigen coordinates sigma scales every projective root
 * by lambda2/lambda1 per shift, whose magnitude differs from 1, so each root
 * pair matches at most once; candidate shifts are confined to an exact
 * magnitude window and each is confirmed or refuted by exact gcd.
 *
 * strip() peels the shifted common factors off a pair, producing the cofactor
 * polynomials t and h and, when the pair reduces to constants, the constant
 * ratio certificate -b/a.
 */

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bidiff/difffield.hpp"

namespace bidiff {

inline constexpr int kDefaultMaxShift = 64;

// Exact spread set. Throws InfiniteSpreadError when gcd(p, q) != 1 and
// ContractError for non-homogeneous or zero input. The exhaustive scan up to
// max_shift is unioned in as a safety net; the magnitude window is the
// completeness mechanism.
std::set<int> spread_set(const BiPoly& p, const BiPoly& q, const DiffField& fld,
                         int max_shift = kDefaultMaxShift);

struct StripResult {
    BiPoly a_final;
    BiPoly b_final;
    BiPoly t;
    BiPoly h;
    // Present iff a_final and b_final are both constants; equals
    // -b_final/a_final, the scalar any reduced kernel ratio must hit.
    std::optional<QElem> ratio;
    // The consumed factors (shift, factor) from each phase, for reporting.
    std::vector<std::pair<int, BiPoly>> s_factors;
    std::vector<std::pair<int, BiPoly>> r_factors;
};

// Runs the stripping loop on homogeneous nonzero p, q (dividing out their gcd
// first). Afterwards Spr(a_final, b_final) = Spr(b_final, a_final) = {}.
StripResult strip(const BiPoly& p, const BiPoly& q, const DiffField& fld,
                  int max_shift = kDefaultMaxShift);

}  // namespace bidiff
