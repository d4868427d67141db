#include "monocat/io.hpp"

namespace monocat {

namespace {

using nlohmann::json;

std::string text_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        raise(errc::parse_error, std::string("missing or non-string field '") + key + "'");
    return j.at(key).get<std::string>();
}

// Morphism components between empty objects parse as 0x0; coerce to the
// shape the endpoints dictate.
LocalMatrix shaped(LocalMatrix m, size_t rows, size_t cols) {
    if ((rows == 0 || cols == 0) && m.is_empty()) return LocalMatrix(m.field(), rows, cols);
    return m;
}

OmegaSpec omega_field(const json& j, FieldSpec field) {
    return omega_make(parse_scalar(text_field(j, "omega"), field));
}

} // namespace

ParsedInput parse_input(const std::string& json_text, FieldSpec field) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(errc::parse_error, e.what());
    }
    return parse_input(j, field);
}

ParsedInput parse_input(const nlohmann::json& j, FieldSpec field) {
    if (!j.is_object()) raise(errc::parse_error, "input must be a JSON object");

    if (j.contains("psi1")) {
        if (j.contains("source_rho1")) {
            PairObject src = PairObject::make(parse_matrix(text_field(j, "source_rho1"), field),
                                              parse_matrix(text_field(j, "source_rho0"), field),
                                              omega_field(j, field));
            PairObject tgt = PairObject::make(parse_matrix(text_field(j, "target_rho1"), field),
                                              parse_matrix(text_field(j, "target_rho0"), field),
                                              omega_field(j, field));
            LocalMatrix psi1 = shaped(parse_matrix(text_field(j, "psi1"), field), tgt.size(), src.size());
            LocalMatrix psi0 = shaped(parse_matrix(text_field(j, "psi0"), field), tgt.size(), src.size());
            return PairMorphism::make(std::move(src), std::move(tgt), std::move(psi1), std::move(psi0));
        }
        MonObject src = MonObject::make(parse_matrix(text_field(j, "source_f"), field),
                                        omega_field(j, field));
        MonObject tgt = MonObject::make(parse_matrix(text_field(j, "target_f"), field),
                                        omega_field(j, field));
        LocalMatrix psi1 = shaped(parse_matrix(text_field(j, "psi1"), field), tgt.size(), src.size());
        LocalMatrix psi0 = shaped(parse_matrix(text_field(j, "psi0"), field), tgt.size(), src.size());
        return MonMorphism::make(std::move(src), std::move(tgt), std::move(psi1), std::move(psi0));
    }
    if (j.contains("rho1"))
        return PairObject::make(parse_matrix(text_field(j, "rho1"), field),
                                parse_matrix(text_field(j, "rho0"), field), omega_field(j, field));
    if (j.contains("f"))
        return MonObject::make(parse_matrix(text_field(j, "f"), field), omega_field(j, field));
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || !j.contains("exponents") ||
            !j.at("exponents").is_array())
            raise(errc::parse_error, "R-module envelope needs integer 'n' and array 'exponents'");
        std::vector<long> exps;
        for (const auto& e : j.at("exponents")) {
            if (!e.is_number_integer()) raise(errc::parse_error, "exponents must be integers");
            exps.push_back(e.get<long>());
        }
        return RModuleObject::make(j.at("n").get<long>(), std::move(exps));
    }
    raise(errc::parse_error, "unrecognized envelope: expected f / rho1 / psi1 / n keys");
}

nlohmann::json to_json(const MonObject& x) {
    return json{{"omega", print_scalar(x.omega().omega)}, {"f", print_matrix(x.f())}};
}

nlohmann::json to_json(const PairObject& p) {
    return json{{"omega", print_scalar(p.omega().omega)},
                {"rho1", print_matrix(p.rho1())},
                {"rho0", print_matrix(p.rho0())}};
}

nlohmann::json to_json(const MonMorphism& m) {
    return json{{"omega", print_scalar(m.source().omega().omega)},
                {"source_f", print_matrix(m.source().f())},
                {"target_f", print_matrix(m.target().f())},
                {"psi1", print_matrix(m.psi1())},
                {"psi0", print_matrix(m.psi0())}};
}

nlohmann::json to_json(const PairMorphism& m) {
    return json{{"omega", print_scalar(m.source().omega().omega)},
                {"source_rho1", print_matrix(m.source().rho1())},
                {"source_rho0", print_matrix(m.source().rho0())},
                {"target_rho1", print_matrix(m.target().rho1())},
                {"target_rho0", print_matrix(m.target().rho0())},
                {"psi1", print_matrix(m.psi1())},
                {"psi0", print_matrix(m.psi0())}};
}

nlohmann::json to_json(const RModuleObject& m) {
    return json{{"n", m.n()}, {"exponents", m.exponents()}};
}

nlohmann::json to_json(const Conflation& c) {
    return json{{"left", to_json(c.left)},
                {"middle", to_json(c.middle)},
                {"right", to_json(c.right)},
                {"inflation", to_json(c.inflation)},
                {"deflation", to_json(c.deflation)}};
}

} // namespace monocat
