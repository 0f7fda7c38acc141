#include "bohr/poly_json.hpp"

#include "bohr/errors.hpp"

namespace bohr {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown field \"" + key + "\"");
  }
}

}  // namespace

Json to_json(const Coefficient& c) {
  if (c.is_zero()) return Json{{"zero", true}};
  if (c.is_root()) return Json{{"root", Json::array({c.as_root().k, c.as_root().m})}};
  return Json{{"re", c.as_general().re}, {"im", c.as_general().im}};
}

Coefficient coefficient_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("coefficient must be an object");
  if (j.contains("root")) {
    reject_unknown(j, {"root"});
    const Json& r = j.at("root");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
      throw ConfigError("root must be [k, m] with integer entries");
    }
    const auto m = r[1].get<std::int64_t>();
    if (m <= 0) throw ConfigError("root order m must be positive");
    return Coefficient::root(r[0].get<std::int64_t>(), m);
  }
  if (j.contains("zero")) {
    reject_unknown(j, {"zero"});
    return Coefficient::zero();
  }
  reject_unknown(j, {"re", "im"});
  const Json& re = require(j, "re");
  const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
  if (!re.is_number()) throw ConfigError("re must be a number");
  return Coefficient::general(re.get<double>(), im);
}

Json to_json(const DirichletPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [n, c] : p.terms()) terms.push_back(Json{{"n", n}, {"coeff", to_json(c)}});
  return Json{{"kind", "dirichlet"}, {"terms", std::move(terms)}};
}

Json to_json(const MultiPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) terms.push_back(Json{{"exp", alpha}, {"coeff", to_json(c)}});
  return Json{{"kind", "multi"}, {"vars", p.var_count()}, {"terms", std::move(terms)}};
}

DirichletPolynomial dirichlet_from_json(const Json& j) {
  if (require(j, "kind") != "dirichlet") throw ConfigError("expected kind \"dirichlet\"");
  reject_unknown(j, {"kind", "terms"});
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw ConfigError("terms must be an array");
  DirichletPolynomial p;
  for (const Json& t : terms) {
    reject_unknown(t, {"n", "coeff"});
    const Json& n = require(t, "n");
    if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0) throw ConfigError("n must be a positive integer");
    p.add_term(n.get<std::uint64_t>(), coefficient_from_json(require(t, "coeff")));
  }
  return p;
}

MultiPolynomial multi_from_json(const Json& j) {
  if (require(j, "kind") != "multi") throw ConfigError("expected kind \"multi\"");
  reject_unknown(j, {"kind", "vars", "terms"});
  const Json& vars = require(j, "vars");
  if (!vars.is_number_unsigned()) throw ConfigError("vars must be a nonnegative integer");
  MultiPolynomial p(vars.get<std::size_t>());
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw ConfigError("terms must be an array");
  for (const Json& t : terms) {
    reject_unknown(t, {"exp", "coeff"});
    const Json& e = require(t, "exp");
    if (!e.is_array()) throw ConfigError("exp must be an array");
    Exponents alpha;
    for (const Json& x : e) {
      if (!x.is_number_unsigned()) throw ConfigError("exponents must be nonnegative integers");
      alpha.push_back(x.get<std::uint32_t>());
    }
    p.add_term(alpha, coefficient_from_json(require(t, "coeff")));
  }
  return p;
}

AnyPolynomial polynomial_from_json(const Json& j) {
  const Json& kind = require(j, "kind");
  if (kind == "dirichlet") return dirichlet_from_json(j);
  if (kind == "multi") return multi_from_json(j);
  throw ConfigError("unknown polynomial kind");
}

std::string dump_canonical(const Json& j) { return j.dump() + "\n"; }

}  // namespace bohr
