#include "bidiff/json_render.hpp"

namespace bidiff {

namespace {

// Sparse term array [[alpha_exp, beta_exp, coeff], ...] in term order.
Json term_array(const BiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t = Json::array();
        t.push_back(e.alpha);
        t.push_back(e.beta);
        t.push_back(c.to_string());
        terms.push_back(t);
    }
    return terms;
}

}  // namespace

Json field_json(const DiffField& fld) {
    Json j;
    j["u"] = rat_to_string(fld.u());
    j["v"] = rat_to_string(fld.v());
    j["D"] = rat_to_string(fld.D());
    j["lambda1"] = fld.lambda1().to_string();
    j["lambda2"] = fld.lambda2().to_string();
    return j;
}

Json support_json(const SupportSet& s) {
    Json j;
    j["finite"] = s.finite;
    if (s.progression) {
        Json p;
        p["d0"] = s.progression->first;
        p["delta"] = s.progression->second;
        j["progression"] = p;
    } else {
        j["progression"] = nullptr;
    }
    return j;
}

Json result_json(const std::string& status, const DiffField* fld, const SolutionSet* sol,
                 const std::optional<Identity>& identity,
                 const std::vector<std::string>& diagnostics) {
    Json j;
    j["status"] = status;
    j["field"] = fld ? field_json(*fld) : Json(nullptr);
    if (sol && sol->particular)
        j["particular"] = sol->particular->to_string();
    else
        j["particular"] = nullptr;
    Json basis = Json::array();
    if (sol)
        for (const BiPoly& k : sol->kernel_basis) basis.push_back(k.to_string());
    j["kernel_basis"] = basis;
    j["support"] = sol ? support_json(sol->support) : Json(nullptr);
    if (identity) {
        Json id;
        id["closed_form"] = identity->closed_form;
        id["verified_up_to"] = identity->verified_up_to;
        j["identity"] = id;
    } else {
        j["identity"] = nullptr;
    }
    j["diagnostics"] = diagnostics;
    Json terms;
    terms["particular"] =
        (sol && sol->particular) ? term_array(*sol->particular) : Json(nullptr);
    Json kernel_terms = Json::array();
    if (sol)
        for (const BiPoly& k : sol->kernel_basis) kernel_terms.push_back(term_array(k));
    terms["kernel_basis"] = kernel_terms;
    j["terms"] = terms;
    return j;
}

}  // namespace bidiff
