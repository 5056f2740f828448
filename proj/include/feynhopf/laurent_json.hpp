#ifndef FEYNHOPF_LAURENT_JSON_HPP
#define FEYNHOPF_LAURENT_JSON_HPP

#include <string>

#include "feynhopf/laurent.hpp"
#include "json.hpp"

namespace feynhopf {

// Wire format:
//   {"truncation": K, "pole_bound": P, "terms": [[exponent, coeff], ...]}
// coeff is "p/q" for RSeries and a list of "p/q" (by t-degree) for TSeries.
// Terms are emitted in increasing exponent order, so dump(parse(x)) == x for
// any document this module produced.

nlohmann::json rational_to_json(const Rational &r);
Rational rational_from_json(const nlohmann::json &j,
                            const std::string &pointer = "");

nlohmann::json tpoly_to_json(const TPoly &p);
TPoly tpoly_from_json(const nlohmann::json &j, const std::string &pointer = "");

nlohmann::json series_to_json(const RSeries &s);
nlohmann::json series_to_json(const TSeries &s);

RSeries rseries_from_json(const nlohmann::json &j,
                          const std::string &pointer = "");
TSeries tseries_from_json(const nlohmann::json &j,
                          const std::string &pointer = "");

}  // namespace feynhopf

#endif  // FEYNHOPF_LAURENT_JSON_HPP
