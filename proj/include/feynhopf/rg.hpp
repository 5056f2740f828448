#ifndef FEYNHOPF_RG_HPP
#define FEYNHOPF_RG_HPP

#include <map>
#include <string>
#include <vector>

#include "feynhopf/hopf.hpp"
#include "feynhopf/renorm.hpp"
#include "json.hpp"

namespace feynhopf::rg {

using hopf::HopfAlgebra;
using hopf::Monomial;
using renorm::RCharacter;
using renorm::TCharacter;

/// theta_{t eps} applied to a t-independent character: every generator value
/// is multiplied by exp(t eps L(G)).
TCharacter scale_character(const HopfAlgebra &h, const RCharacter &f);

/// Same action on a map H -> A: X(m) times exp(t eps deg(m)).
std::function<TSeries(const Monomial &)> theta(const HopfAlgebra &h,
                                               std::function<RSeries(const Monomial &)> x,
                                               int truncation, int pole_bound);

struct ScaleIndependence {
  renorm::BPResult<TPoly> scaled;
  std::map<std::string, bool> t_free;  // counterterm coefficients are constants

  bool all() const;
};

/// BP on the scaled character; records whether each counterterm is free of t.
ScaleIndependence pole_part_scale_independence(const HopfAlgebra &h, const RCharacter &f);

/// Values of rg_t: polynomials in t, extended multiplicatively.
struct RGElement {
  std::map<std::string, TPoly> values;

  TPoly operator()(const Monomial &m) const;
};

/// eps^0 coefficient of C * theta_{t eps}(C o S) per generator, with C the MS
/// counterterm of f. Throws DomainError if a negative power survives.
RGElement rg_element(const HopfAlgebra &h, const RCharacter &f);

/// Coefficient of t^1 in each rg_t value.
std::map<std::string, Rational> beta(const RGElement &rg);

/// Coefficient of t^k in p (zero past the degree).
Rational t_coefficient(const TPoly &p, int k);

/// rg_{t+s} and rg_t * rg_s as polynomials in s with coefficients in t.
struct GroupLawTerm {
  TSPoly shifted;
  TSPoly convolved;
  bool holds = false;
};

std::map<std::string, GroupLawTerm> rg_group_law_check(const HopfAlgebra &h,
                                                       const RGElement &rg);

/// R of the scaled character at eps = 0 against rg_t * R_0.
struct FlowLawTerm {
  TPoly scaled;
  TPoly predicted;
  bool holds = false;
};

std::map<std::string, FlowLawTerm> flow_consistency_check(const HopfAlgebra &h,
                                                          const RCharacter &f,
                                                          const RGElement &rg);

struct RGReport {
  ScaleIndependence scale;
  RGElement rg;
  std::map<std::string, Rational> beta;
  std::map<std::string, GroupLawTerm> group_law;
  std::map<std::string, FlowLawTerm> flow_law;
  std::map<std::string, bool> identity_at_zero;  // rg_0 = 0 in positive degree
  std::map<std::string, bool> first_order;       // linear when deg 1 with a simple pole

  bool all() const;
};

/// Everything above in one pass. Throws like bogoliubov and rg_element.
RGReport analyze(const HopfAlgebra &h, const RCharacter &f);

/// CLI report; polynomials are listed up to t^max_t_degree.
nlohmann::json report_to_json(const RGReport &report, int max_t_degree);

}  // namespace feynhopf::rg

#endif  // FEYNHOPF_RG_HPP
