#include "feynhopf/renorm.hpp"

#include "feynhopf/laurent_json.hpp"

namespace feynhopf::renorm {

using nlohmann::json;

RCharacter character_from_json(const json &j) {
  if (!j.is_object()) throw ValidationError("", "expected a character object");
  RCharacter x;
  for (const char *key : {"truncation", "pole_bound"}) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ValidationError(std::string("/") + key, "expected an integer");
  }
  x.truncation = j["truncation"].get<int>();
  x.pole_bound = j["pole_bound"].get<int>();
  if (x.truncation < 1) throw ValidationError("/truncation", "must be >= 1");
  if (x.pole_bound < 1) throw ValidationError("/pole_bound", "must be >= 1");
  if (!j.contains("values") || !j["values"].is_object())
    throw ValidationError("/values", "expected an object of series");
  for (const auto &[id, v] : j["values"].items()) {
    const std::string at = "/values/" + id;
    json s = v;
    if (s.is_object()) {
      if (!s.contains("truncation")) s["truncation"] = x.truncation;
      if (!s.contains("pole_bound")) s["pole_bound"] = x.pole_bound;
    }
    RSeries series = rseries_from_json(s, at);
    if (series.pole_bound() > x.pole_bound)
      throw ValidationError(at + "/pole_bound", "exceeds the character's pole bound");
    x.values.emplace(id, series.truncated(x.truncation));
  }
  return x;
}

json character_to_json(const RCharacter &x) {
  json values = json::object();
  for (const auto &[id, s] : x.values) values[id] = series_to_json(s);
  return json{{"truncation", x.truncation},
              {"pole_bound", x.pole_bound},
              {"values", std::move(values)}};
}

void require_complete(const RCharacter &x, const hopf::NestingSpec &spec) {
  for (const auto &g : spec.generators())
    if (!x.values.count(g.id))
      throw ValidationError("/values/" + g.id, "missing value for generator \"" + g.id + "\"");
}

json report_to_json(const BPResult<Rational> &result, const BPReport &report) {
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  json gens = json::object();
  for (const auto &[id, g] : result.per_generator) {
    const auto &ck = report.per_generator.at(id);
    gens[id] = json{
        {"prepared", series_to_json(g.prepared)},
        {"counterterm", series_to_json(g.counterterm)},
        {"renormalized", series_to_json(g.renormalized)},
        {"renormalized_at_zero", g.renormalized.coeff(0).str()},
        {"checks",
         {{"counterterm_pure_pole", verdict(ck.counterterm_pure_pole)},
          {"renormalized_regular", verdict(ck.renormalized_regular)},
          {"subtraction_vanishes", verdict(ck.subtraction_vanishes)},
          {"convolution_C_F_equals_R", verdict(ck.convolution)},
          {"birkhoff_CS_R_equals_F", verdict(ck.birkhoff)},
          {"idempotent", verdict(ck.idempotent)}}}};
  }
  json mult = json::array();
  for (const auto &m : report.multiplicativity)
    mult.push_back(json{{"a", m.a},
                        {"b", m.b},
                        {"counterterm", verdict(m.counterterm)},
                        {"renormalized", verdict(m.renormalized)}});
  return json{{"generators", std::move(gens)},
              {"multiplicativity", std::move(mult)},
              {"all_checks", verdict(report.all())}};
}

}  // namespace feynhopf::renorm
