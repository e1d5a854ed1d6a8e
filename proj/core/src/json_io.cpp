#include "vizsos/json_io.hpp"

#include <fstream>

namespace vizsos {

Json to_json(const RadicalScalar& value) {
  Json j = Json::object();
  for (const auto& [m, q] : value.terms())
    j[std::to_string(m)] = rational_to_string(q);
  return j;
}

RadicalScalar radical_from_json(const Json& j) {
  RadicalScalar v;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long radicand = std::stol(it.key());
    v += RadicalScalar::sqrt_term(parse_rational(it.value().get<std::string>()),
                                  radicand);
  }
  return v;
}

namespace {

std::map<std::string, uint32_t> name_index(const VarRegistry& reg) {
  std::map<std::string, uint32_t> idx;
  for (uint32_t v = 0; v < reg.num_vars(); ++v) idx[reg.name(v)] = v;
  return idx;
}

}  // namespace

Json to_json(const Polynomial& poly, const VarRegistry& reg) {
  Json terms = Json::array();
  for (const auto& t : poly.terms()) {
    Json mono = Json::object();
    for (const auto& [var, exp] : t.monomial.exponents())
      mono[reg.name(var)] = exp;
    terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"monomial", mono}});
  }
  return terms;
}

Polynomial polynomial_from_json(const Json& j, const VarRegistry& reg,
                                OrderPtr order) {
  auto idx = name_index(reg);
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j) {
    std::vector<std::pair<uint32_t, uint32_t>> exps;
    for (auto it = t.at("monomial").begin(); it != t.at("monomial").end();
         ++it) {
      auto found = idx.find(it.key());
      if (found == idx.end())
        throw ValidationError("unknown variable in polynomial: " + it.key());
      exps.emplace_back(found->second, it.value().get<uint32_t>());
    }
    terms.push_back({Monomial::from_pairs(std::move(exps)),
                     radical_from_json(t.at("coeff"))});
  }
  return Polynomial::from_terms(order, std::move(terms));
}

Json to_json(const ClassParams& params) {
  return Json{{"ng", params.nG},
              {"kg", params.kG},
              {"nh", params.nH},
              {"kh", params.kH}};
}

ClassParams params_from_json(const Json& j) {
  ClassParams p;
  p.nG = j.at("ng").get<int>();
  p.kG = j.at("kg").get<int>();
  p.nH = j.at("nh").get<int>();
  p.kH = j.at("kh").get<int>();
  p.validate();
  return p;
}

Json ideal_to_json(const GeneratorSet& gens, const VarRegistry& reg) {
  Json j;
  j["params"] = to_json(reg.params());
  j["variables"] = reg.names();
  Json list = Json::array();
  for (const auto& g : gens.gens)
    list.push_back(Json{{"tag", g.tag}, {"polynomial", to_json(g.poly, reg)}});
  j["generators"] = list;
  return j;
}

GeneratorSet ideal_from_json(const Json& j, VarRegistry& reg_out) {
  reg_out = VarRegistry(params_from_json(j.at("params")));
  OrderPtr order = reg_out.default_order();
  GeneratorSet gens;
  gens.order = order;
  for (const auto& g : j.at("generators"))
    gens.gens.push_back({g.at("tag").get<std::string>(),
                         polynomial_from_json(g.at("polynomial"), reg_out,
                                              order)});
  return gens;
}

Json groebner_to_json(const GroebnerBasis& gb, const VarRegistry& reg) {
  Json j;
  j["params"] = to_json(reg.params());
  j["order"] = gb.order->kind() == MonomialOrder::Kind::degrevlex
                   ? "degrevlex"
                   : "lex";
  j["all_boolean"] = gb.all_boolean;
  j["source_hash"] = gb.source_hash;
  Json list = Json::array();
  for (const auto& g : gb.basis) list.push_back(to_json(g, reg));
  j["basis"] = list;
  j["size"] = gb.basis.size();
  return j;
}

GroebnerBasis groebner_from_json(const Json& j, const VarRegistry& reg) {
  GroebnerBasis gb;
  std::string kind = j.at("order").get<std::string>();
  gb.order = reg.order(kind == "lex" ? MonomialOrder::Kind::lex
                                     : MonomialOrder::Kind::degrevlex);
  gb.all_boolean = j.value("all_boolean", false);
  gb.source_hash = j.value("source_hash", std::string());
  for (const auto& g : j.at("basis"))
    gb.basis.push_back(polynomial_from_json(g, reg, gb.order));
  return gb;
}

Json certificate_to_json(const Certificate& cert, const VarRegistry& reg) {
  Json j;
  j["params"] = to_json(cert.params);
  j["degree"] = cert.degree;
  Json list = Json::array();
  for (const auto& s : cert.polys) list.push_back(to_json(s, reg));
  j["polynomials"] = list;
  j["provenance"] =
      Json{{"source", cert.provenance}, {"sign_pattern", cert.sign_pattern}};
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.params = params_from_json(j.at("params"));
  VarRegistry reg(cert.params);
  OrderPtr order = reg.default_order();
  cert.degree = j.at("degree").get<int>();
  for (const auto& s : j.at("polynomials"))
    cert.polys.push_back(polynomial_from_json(s, reg, order));
  if (j.contains("provenance")) {
    cert.provenance = j["provenance"].value("source", std::string());
    cert.sign_pattern = j["provenance"].value("sign_pattern", std::string());
  }
  return cert;
}

std::string monomial_to_key(const Monomial& m, const VarRegistry& reg) {
  if (m.is_one()) return "1";
  std::string key;
  for (const auto& [var, exp] : m.exponents()) {
    if (!key.empty()) key += "*";
    key += reg.name(var);
    if (exp > 1) key += "^" + std::to_string(exp);
  }
  return key;
}

Json solution_to_json(const SdpSolution& sol, const SdpProblem& prob,
                      const VarRegistry& reg) {
  Json j;
  j["status"] = to_string(sol.status);
  j["residual"] = sol.residual;
  j["min_eigenvalue"] = sol.min_eigenvalue;
  j["iterations"] = sol.iterations;
  j["p"] = prob.p;
  j["constraints"] = prob.constraints.size();
  Json monos = Json::array();
  for (const auto& m : prob.v) monos.push_back(monomial_to_key(m, reg));
  j["monomials"] = monos;
  Json x = Json::array();
  for (int r = 0; r < sol.X.rows(); ++r)
    for (int c = 0; c < sol.X.cols(); ++c) x.push_back(sol.X(r, c));
  j["X"] = x;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace vizsos
