#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "bidiff/solver.hpp"
#include "bidiff/summation.hpp"

namespace bidiff {

using Json = nlohmann::ordered_json;

Json field_json(const DiffField& fld);
Json support_json(const SupportSet& s);

// The full result document: {"status", "field", "particular", "kernel_basis",
// "support", "identity", "diagnostics"} with deterministic key order.
Json result_json(const std::string& status, const DiffField* fld, const SolutionSet* sol,
                 const std::optional<Identity>& identity,
                 const std::vector<std::string>& diagnostics);

}  // namespace bidiff
