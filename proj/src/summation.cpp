#include "bidiff/summation.hpp"

namespace bidiff {

namespace {

// s_lo .. s_hi inclusive; the recurrence runs backward exactly since u != 0.
std::vector<Rat> sequence_range(const Recurrence& rec, long lo, long hi) {
    if (lo > hi) return {};
    std::vector<Rat> fwd;  // s_0, s_1, ... up to max(hi, 1)
    fwd.push_back(rec.s0);
    fwd.push_back(rec.s1);
    for (long n = 2; n <= hi; ++n)
        fwd.push_back(rec.u * fwd[n - 2] + rec.v * fwd[n - 1]);
    std::vector<Rat> bwd;  // s_-1, s_-2, ...
    if (lo < 0) {
        if (rec.u == 0) throw ContractError("sequence_range: u = 0 cannot run backward");
        Rat next = rec.s1;   // s_{n+2}
        Rat cur = rec.s0;    // s_{n+1}
        for (long n = -1; n >= lo; --n) {
            Rat prev = (next - rec.v * cur) / rec.u;
            bwd.push_back(prev);
            next = cur;
            cur = prev;
        }
    }
    std::vector<Rat> out;
    out.reserve(hi - lo + 1);
    for (long n = lo; n <= hi; ++n)
        out.push_back(n >= 0 ? fwd[n] : bwd[-n - 1]);
    return out;
}

}  // namespace

std::vector<Rat> sequence_terms(const Recurrence& rec, long count) {
    if (count <= 0) return {};
    return sequence_range(rec, rec.n0, rec.n0 + count - 1);
}

bool numeric_verify(const Identity& id, long M) {
    const Recurrence& rec = id.recurrence;
    if (M < rec.n0) throw ContractError("numeric_verify: M must be at least n0");
    std::vector<Rat> s = sequence_range(rec, rec.n0, M + 2);
    auto at = [&](long n) -> const Rat& { return s[n - rec.n0]; };
    QElem boundary = id.telescoper.eval(at(rec.n0), at(rec.n0 + 1));
    QElem acc;
    for (long m = rec.n0; m <= M; ++m) {
        acc += id.summand.eval(at(m), at(m + 1));
        QElem rhs = id.telescoper.eval(at(m + 1), at(m + 2)) - boundary;
        if (!(acc == rhs)) return false;
    }
    return true;
}

TelescopeResult telescope_sum(const Recurrence& rec, const BiPoly& f, int cap,
                              long verify_terms) {
    if (f.is_zero()) throw ContractError("telescope_sum: summand must be nonzero");
    DiffField fld = make_field(rec.u, rec.v);
    SolutionSet sol = solve_full(BiPoly(Rat(1)), BiPoly(Rat(-1)), f, fld, cap);

    TelescopeResult out;
    out.support = sol.support;
    out.diagnostics = sol.diagnostics;

    if (!sol.particular) {
        // Diagnose the obstruction: with a = 1, b = -1 the equation splits by
        // degree, and a component is reachable iff its projection onto the
        // sigma-invariant eigen directions vanishes.
        for (const auto& [d, fd] : hom_components(f)) {
            QVector eigen = to_eigen(fd, fld);
            for (std::size_t k = 0; k < eigen.size(); ++k) {
                if (eigen[k].is_zero()) continue;
                if (fld.lambda_power(static_cast<long>(k), d - static_cast<long>(k)).is_one()) {
                    out.diagnostics.push_back(
                        "no polynomial telescoper: the degree-" + std::to_string(d) +
                        " component of f has a nonzero sigma-invariant part (h1^" +
                        std::to_string(k) + "*h2^" + std::to_string(d - k) +
                        " direction); partial sums of a sigma-invariant grow with the index "
                        "and never telescope");
                }
            }
        }
        return out;
    }

    Identity id;
    id.recurrence = rec;
    id.summand = f;
    id.telescoper = *sol.particular;
    std::string n0s = std::to_string(rec.n0);
    std::string n1s = std::to_string(rec.n0 + 1);
    QElem boundary =
        id.telescoper.eval(sequence_range(rec, rec.n0, rec.n0)[0],
                           sequence_range(rec, rec.n0 + 1, rec.n0 + 1)[0]);
    id.closed_form = "sum_{n=" + n0s + "}^{m} f(s_n, s_{n+1}) = g(s_{m+1}, s_{m+2}) - g(s_" +
                     n0s + ", s_" + n1s + "); f = " + f.to_string() +
                     "; g = " + id.telescoper.to_string() + "; g(s_" + n0s + ", s_" + n1s +
                     ") = " + boundary.to_string();
    id.verified_up_to = std::max(verify_terms, rec.n0);
    if (!numeric_verify(id, id.verified_up_to))
        throw Error("telescoped identity failed the numeric check (internal bug)");
    out.identity = std::move(id);
    return out;
}

}  // namespace bidiff
