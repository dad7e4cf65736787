#pragma once

#include <string>

#include "json.hpp"
#include "solvspec/liealg.hpp"

namespace solvspec {

// Schema errors carry the JSON pointer of the offending value, rooted at `pointer`.
LieAlgebra algebra_from_json(const nlohmann::json& doc, const std::string& pointer = "");
LieAlgebra algebra_from_text(const std::string& text);
nlohmann::json algebra_to_json(const LieAlgebra& l);

[[noreturn]] void schema_error(const std::string& pointer, const std::string& msg);

}  // namespace solvspec
