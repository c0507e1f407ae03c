#pragma once

#include <json.hpp>

#include "star/starcore.hpp"

namespace star {

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json branch_matrix_to_json(const BranchMatrix& u);
BranchMatrix branch_matrix_from_json(const nlohmann::json& j);

/// {"p": Polynomial-JSON | {"elementary": k}, "U": {"m":, "n":, "rows": []}}
nlohmann::json star_symbol_to_json(const StarSymbol& s);
StarSymbol star_symbol_from_json(const nlohmann::json& j);

}  // namespace star
