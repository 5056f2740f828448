#include "feynhopf/rg.hpp"

#include "feynhopf/laurent_json.hpp"

namespace feynhopf::rg {

using nlohmann::json;

namespace {

const TPoly kT(std::vector<Rational>{Rational(0), Rational(1)});

TSeries exp_degree(int degree, int truncation, int pole_bound) {
  return exp_eps_poly(TPoly(Rational(degree)) * kT, truncation, pole_bound);
}

// p(t) viewed as a polynomial in s with constant coefficients.
TSPoly in_s(const TPoly &p) {
  std::vector<TPoly> c;
  for (const auto &x : p.coefficients()) c.emplace_back(x);
  return TSPoly(std::move(c));
}

bool is_constant(const TSeries &s) {
  for (const auto &[k, c] : s.terms())
    if (c.degree() > 0) return false;
  return true;
}

json poly_json(const TPoly &p, int max_degree) {
  json c = json::array();
  for (int k = 0; k <= std::min(p.degree(), max_degree); ++k)
    c.push_back(t_coefficient(p, k).str());
  return c;
}

const char *verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

Rational t_coefficient(const TPoly &p, int k) {
  if (k < 0 || k > p.degree()) return Rational(0);
  return p.coefficients()[k];
}

TCharacter scale_character(const HopfAlgebra &h, const RCharacter &f) {
  TCharacter out;
  out.truncation = f.truncation;
  out.pole_bound = f.pole_bound;
  for (const auto &[id, s] : f.values) {
    const int degree = h.spec().contains(id) ? h.spec().degree(id) : 0;
    out.values.emplace(id, exp_degree(degree, f.truncation, f.pole_bound) * lift_to_t(s));
  }
  return out;
}

std::function<TSeries(const Monomial &)> theta(const HopfAlgebra &h,
                                               std::function<RSeries(const Monomial &)> x,
                                               int truncation, int pole_bound) {
  return [&h, x = std::move(x), truncation, pole_bound](const Monomial &m) {
    return exp_degree(h.degree(m), truncation, pole_bound) * lift_to_t(x(m));
  };
}

bool ScaleIndependence::all() const {
  for (const auto &[id, ok] : t_free)
    if (!ok) return false;
  return true;
}

ScaleIndependence pole_part_scale_independence(const HopfAlgebra &h, const RCharacter &f) {
  ScaleIndependence out{renorm::bogoliubov(h, scale_character(h, f)), {}};
  for (const auto &[id, c] : out.scaled.counterterm.values) out.t_free[id] = is_constant(c);
  return out;
}

TPoly RGElement::operator()(const Monomial &m) const {
  TPoly out(Rational(1));
  for (const auto &id : m) {
    auto it = values.find(id);
    if (it == values.end()) throw DomainError("rg element has no value for \"" + id + "\"");
    out = out * it->second;
  }
  return out;
}

RGElement rg_element(const HopfAlgebra &h, const RCharacter &f) {
  const auto bp = renorm::bogoliubov(h, f);
  const auto &c = bp.counterterm;
  const std::function<TSeries(const Monomial &)> lifted = [&c](const Monomial &m) {
    return lift_to_t(c(m));
  };
  const auto scaled_inverse = theta(h, renorm::inverse_map(h, c), f.truncation, f.pole_bound);
  RGElement rg;
  for (const auto &id : h.spec().by_degree()) {
    const TSeries x = hopf::convolve(h, lifted, scaled_inverse, hopf::Element::generator(id),
                                     TSeries(f.truncation, f.pole_bound));
    if (!x.is_regular())
      throw DomainError("rg_t(\"" + id + "\") keeps a pole of order " +
                        std::to_string(-x.valuation()) +
                        "; the character's counterterms depend on the scale");
    rg.values[id] = x.coeff(0);
  }
  return rg;
}

std::map<std::string, Rational> beta(const RGElement &rg) {
  std::map<std::string, Rational> out;
  for (const auto &[id, p] : rg.values) out[id] = t_coefficient(p, 1);
  return out;
}

std::map<std::string, GroupLawTerm> rg_group_law_check(const HopfAlgebra &h,
                                                       const RGElement &rg) {
  const TSPoly t_plus_s(std::vector<TPoly>{kT, TPoly(Rational(1))});
  std::map<std::string, GroupLawTerm> out;
  for (const auto &[id, p] : rg.values) {
    GroupLawTerm term;
    term.shifted = p.evaluate(t_plus_s);
    for (const auto &[lr, k] : h.coproduct(Monomial{id}).terms())
      term.convolved += TSPoly(TPoly(k) * rg(lr.first)) * in_s(rg(lr.second));
    term.holds = term.shifted == term.convolved;
    out.emplace(id, std::move(term));
  }
  return out;
}

std::map<std::string, FlowLawTerm> flow_consistency_check(const HopfAlgebra &h,
                                                          const RCharacter &f,
                                                          const RGElement &rg) {
  const auto scaled = renorm::bogoliubov(h, scale_character(h, f));
  const auto base = renorm::bogoliubov(h, f);
  std::map<std::string, FlowLawTerm> out;
  for (const auto &id : h.spec().by_degree()) {
    FlowLawTerm term;
    term.scaled = scaled.renormalized.at(id).coeff(0);
    for (const auto &[lr, k] : h.coproduct(Monomial{id}).terms())
      term.predicted += TPoly(k * base.renormalized(lr.second).coeff(0)) * rg(lr.first);
    term.holds = term.scaled == term.predicted;
    out.emplace(id, std::move(term));
  }
  return out;
}

bool RGReport::all() const {
  if (!scale.all()) return false;
  for (const auto &[id, g] : group_law)
    if (!g.holds) return false;
  for (const auto &[id, g] : flow_law)
    if (!g.holds) return false;
  for (const auto &[id, ok] : identity_at_zero)
    if (!ok) return false;
  for (const auto &[id, ok] : first_order)
    if (!ok) return false;
  return true;
}

RGReport analyze(const HopfAlgebra &h, const RCharacter &f) {
  RGReport r;
  r.scale = pole_part_scale_independence(h, f);
  r.rg = rg_element(h, f);
  r.beta = beta(r.rg);
  r.group_law = rg_group_law_check(h, r.rg);
  r.flow_law = flow_consistency_check(h, f, r.rg);
  for (const auto &[id, p] : r.rg.values) {
    r.identity_at_zero[id] = t_coefficient(p, 0) == Rational(0);
    if (h.spec().degree(id) == 1 && f.at(id).valuation() >= -1)
      r.first_order[id] = p.degree() <= 1;
  }
  return r;
}

json report_to_json(const RGReport &report, int max_t_degree) {
  json gens = json::object();
  for (const auto &[id, p] : report.rg.values) {
    const auto &flow = report.flow_law.at(id);
    json checks = {{"counterterm_t_free", verdict(report.scale.t_free.at(id))},
                   {"group_law", verdict(report.group_law.at(id).holds)},
                   {"flow_law", verdict(flow.holds)},
                   {"identity_at_zero", verdict(report.identity_at_zero.at(id))}};
    if (report.first_order.count(id))
      checks["first_order"] = verdict(report.first_order.at(id));
    gens[id] = json{{"rg", poly_json(p, max_t_degree)},
                    {"rg_degree", p.degree()},
                    {"beta", report.beta.at(id).str()},
                    {"scaled_counterterm", series_to_json(report.scale.scaled.counterterm.at(id))},
                    {"renormalized_at_zero", poly_json(flow.scaled, max_t_degree)},
                    {"checks", std::move(checks)}};
  }
  return json{{"t_degree", max_t_degree},
              {"generators", std::move(gens)},
              {"all_checks", verdict(report.all())}};
}

}  // namespace feynhopf::rg
