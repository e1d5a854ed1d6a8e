#pragma once

#include <json.hpp>
#include <string>

#include "vizsos/certificates.hpp"
#include "vizsos/model.hpp"
#include "vizsos/sosdp.hpp"

namespace vizsos {

using Json = nlohmann::json;

// RadicalScalar <-> {"<radicand>": "num/den", ...}
Json to_json(const RadicalScalar& value);
RadicalScalar radical_from_json(const Json& j);

// Polynomial <-> [{"coeff": {...}, "monomial": {"<var>": exp}}, ...]
Json to_json(const Polynomial& poly, const VarRegistry& reg);
Polynomial polynomial_from_json(const Json& j, const VarRegistry& reg,
                                OrderPtr order);

Json to_json(const ClassParams& params);
ClassParams params_from_json(const Json& j);

// {params, variables, generators:[{tag, polynomial}]}
Json ideal_to_json(const GeneratorSet& gens, const VarRegistry& reg);
GeneratorSet ideal_from_json(const Json& j, VarRegistry& reg_out);

Json groebner_to_json(const GroebnerBasis& gb, const VarRegistry& reg);
GroebnerBasis groebner_from_json(const Json& j, const VarRegistry& reg);

Json certificate_to_json(const Certificate& cert, const VarRegistry& reg);
Certificate certificate_from_json(const Json& j);

Json solution_to_json(const SdpSolution& sol, const SdpProblem& prob,
                      const VarRegistry& reg);

std::string monomial_to_key(const Monomial& m, const VarRegistry& reg);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace vizsos
