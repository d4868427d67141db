#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "monocat/pair.hpp"
#include "monocat/rmodule.hpp"
#include "monocat/text.hpp"

namespace monocat {

// JSON envelopes:
//   Mon object      {"omega": scalar, "f": matrix}
//   Pair object     {"omega": scalar, "rho1": matrix, "rho0": matrix}
//   R-module        {"n": int, "exponents": [int...]}
//   Mon morphism    {"omega", "source_f", "target_f", "psi1", "psi0"}
//   Pair morphism   {"omega", "source_rho1", "source_rho0",
//                    "target_rho1", "target_rho0", "psi1", "psi0"}
// Matrix and scalar values use the text grammar of text.hpp.

using ParsedInput =
    std::variant<MonObject, PairObject, MonMorphism, PairMorphism, RModuleObject>;

ParsedInput parse_input(const std::string& json_text, FieldSpec field);
ParsedInput parse_input(const nlohmann::json& j, FieldSpec field);

nlohmann::json to_json(const MonObject& x);
nlohmann::json to_json(const PairObject& p);
nlohmann::json to_json(const MonMorphism& m);
nlohmann::json to_json(const PairMorphism& m);
nlohmann::json to_json(const RModuleObject& m);
nlohmann::json to_json(const Conflation& c);

} // namespace monocat
