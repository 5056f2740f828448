#include "feynhopf/laurent_json.hpp"

#include <vector>

namespace feynhopf {

using nlohmann::json;

json rational_to_json(const Rational &r) { return r.str(); }

Rational rational_from_json(const json &j, const std::string &pointer) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const DomainError &e) {
      throw ValidationError(pointer, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ValidationError(pointer, "expected a rational string \"p/q\"");
}

json tpoly_to_json(const TPoly &p) {
  json out = json::array();
  for (const auto &c : p.coefficients()) out.push_back(c.str());
  return out;
}

TPoly tpoly_from_json(const json &j, const std::string &pointer) {
  if (!j.is_array())
    throw ValidationError(pointer, "expected a list of rationals (by degree)");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(rational_from_json(j[i], pointer + "/" + std::to_string(i)));
  return TPoly(std::move(c));
}

namespace {

template <class C, class Enc>
json encode(const LaurentSeries<C> &s, Enc enc) {
  json terms = json::array();
  for (const auto &[k, c] : s.terms()) terms.push_back(json::array({k, enc(c)}));
  return json{{"truncation", s.truncation()},
              {"pole_bound", s.pole_bound()},
              {"terms", std::move(terms)}};
}

int int_field(const json &j, const char *key, const std::string &pointer) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ValidationError(pointer + "/" + key, "expected an integer");
  return j[key].get<int>();
}

template <class C, class Dec>
LaurentSeries<C> decode(const json &j, const std::string &pointer, Dec dec) {
  if (!j.is_object()) throw ValidationError(pointer, "expected a series object");
  const int k = int_field(j, "truncation", pointer);
  const int p = int_field(j, "pole_bound", pointer);
  if (p < 0) throw ValidationError(pointer + "/pole_bound", "must be >= 0");
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ValidationError(pointer + "/terms", "expected a list of terms");
  typename LaurentSeries<C>::term_map terms;
  const json &t = j["terms"];
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string at = pointer + "/terms/" + std::to_string(i);
    if (!t[i].is_array() || t[i].size() != 2 || !t[i][0].is_number_integer())
      throw ValidationError(at, "expected [exponent, coefficient]");
    const int e = t[i][0].get<int>();
    if (e < -p || e > k)
      throw ValidationError(at + "/0", "exponent outside [-pole_bound, truncation]");
    if (!terms.emplace(e, dec(t[i][1], at + "/1")).second)
      throw ValidationError(at + "/0", "duplicate exponent");
  }
  return LaurentSeries<C>(std::move(terms), k, p);
}

}  // namespace

json series_to_json(const RSeries &s) { return encode(s, rational_to_json); }
json series_to_json(const TSeries &s) { return encode(s, tpoly_to_json); }

RSeries rseries_from_json(const json &j, const std::string &pointer) {
  return decode<Rational>(j, pointer, rational_from_json);
}

TSeries tseries_from_json(const json &j, const std::string &pointer) {
  return decode<TPoly>(j, pointer, tpoly_from_json);
}

}  // namespace feynhopf
