#ifndef FEYNHOPF_RENORM_HPP
#define FEYNHOPF_RENORM_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "feynhopf/error.hpp"
#include "feynhopf/hopf.hpp"
#include "feynhopf/laurent.hpp"
#include "json.hpp"

namespace feynhopf::renorm {

using hopf::HopfAlgebra;
using hopf::Monomial;

/// Algebra morphism H -> A given by its values on generators; A is Laurent
/// series with coefficients in C (Rational, or TPoly for scaled characters).
template <class C>
struct Character {
  using Series = LaurentSeries<C>;

  int truncation = kDefaultTruncation;
  int pole_bound = kDefaultPoleBound;
  std::map<std::string, Series> values;

  Series one() const { return Series::one(truncation, pole_bound); }
  Series zero() const { return Series(truncation, pole_bound); }

  const Series &at(const std::string &id) const {
    auto it = values.find(id);
    if (it == values.end()) throw DomainError("character has no value for \"" + id + "\"");
    return it->second;
  }
  /// Multiplicative extension; the empty monomial maps to 1.
  Series operator()(const Monomial &m) const {
    Series out = one();
    for (const auto &id : m) out = out * at(id);
    return out;
  }
};

using RCharacter = Character<Rational>;
using TCharacter = Character<TPoly>;

/// Renormalization scheme: a projection T on the target algebra.
template <class C>
using Scheme = std::function<LaurentSeries<C>(const LaurentSeries<C> &)>;

template <class C>
Scheme<C> minimal_subtraction() {
  return [](const LaurentSeries<C> &s) { return ms_project(s); };
}

template <class C>
struct GeneratorResult {
  LaurentSeries<C> prepared;
  LaurentSeries<C> counterterm;
  LaurentSeries<C> renormalized;
};

template <class C>
struct BPResult {
  std::map<std::string, GeneratorResult<C>> per_generator;
  Character<C> counterterm;
  Character<C> renormalized;
};

/// P(G) = F(G) + sum over subdivergences C(sub) F(G/sub), with C taken from
/// `counterterm` (which must already hold every generator of lower degree).
template <class C>
LaurentSeries<C> prepare(const HopfAlgebra &h, const Character<C> &f, const std::string &id,
                         const Character<C> &counterterm) {
  LaurentSeries<C> p = f.at(id);
  for (const auto &sd : h.spec().generator(id).subdivergences)
    p = p + counterterm(sd.sub) * f.at(sd.cograph);
  return p;
}

/// Bogoliubov-Parasiuk recursion over all generators in degree order:
/// C = -T(P), R = P + C. Throws NonLocalDivergence if some R keeps a pole.
template <class C>
BPResult<C> bogoliubov(const HopfAlgebra &h, const Character<C> &f,
                       const Scheme<C> &t = minimal_subtraction<C>()) {
  BPResult<C> out;
  out.counterterm.truncation = out.renormalized.truncation = f.truncation;
  out.counterterm.pole_bound = out.renormalized.pole_bound = f.pole_bound;
  for (const auto &id : h.spec().by_degree()) {
    GeneratorResult<C> r;
    r.prepared = prepare(h, f, id, out.counterterm);
    r.counterterm = -t(r.prepared);
    r.renormalized = r.prepared + r.counterterm;
    if (!r.renormalized.is_regular())
      throw NonLocalDivergence("renormalized value of \"" + id +
                               "\" still has a pole of order " +
                               std::to_string(-r.renormalized.valuation()));
    out.counterterm.values[id] = r.counterterm;
    out.renormalized.values[id] = r.renormalized;
    out.per_generator.emplace(id, std::move(r));
  }
  return out;
}

/// Map view of a character for hopf::convolve.
template <class C>
std::function<LaurentSeries<C>(const Monomial &)> as_map(const Character<C> &x) {
  return [&x](const Monomial &m) { return x(m); };
}

/// X o S: the convolution inverse of the character X.
template <class C>
std::function<LaurentSeries<C>(const Monomial &)> inverse_map(const HopfAlgebra &h,
                                                             const Character<C> &x) {
  return [&h, &x](const Monomial &m) {
    LaurentSeries<C> out = x.zero();
    for (const auto &[mono, c] : h.antipode_recursive(m).terms()) out = out + c * x(mono);
    return out;
  };
}

/// BP recursion run directly on an arbitrary monomial through the reduced
/// coproduct, without assuming multiplicativity.
template <class C>
class MonomialBP {
 public:
  MonomialBP(const HopfAlgebra &h, const Character<C> &f,
             Scheme<C> t = minimal_subtraction<C>())
      : h_(h), f_(f), t_(std::move(t)) {}

  const GeneratorResult<C> &operator()(const Monomial &m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    GeneratorResult<C> r;
    if (m.empty()) {
      r = {f_.one(), f_.one(), f_.one()};
    } else {
      r.prepared = f_(m);
      const hopf::Tensor reduced = h_.reduced_coproduct(m);
      for (const auto &[lr, k] : reduced.terms())
        r.prepared = r.prepared + k * ((*this)(lr.first).counterterm * f_(lr.second));
      r.counterterm = -t_(r.prepared);
      r.renormalized = r.prepared + r.counterterm;
    }
    return memo_.emplace(m, std::move(r)).first->second;
  }

 private:
  const HopfAlgebra &h_;
  const Character<C> &f_;
  Scheme<C> t_;
  std::map<Monomial, GeneratorResult<C>> memo_;
};

struct GeneratorChecks {
  bool counterterm_pure_pole = false;
  bool renormalized_regular = false;
  bool subtraction_vanishes = false;  // T(R) = 0
  bool convolution = false;           // C * F = R
  bool birkhoff = false;              // (C o S) * R = F
  bool idempotent = false;            // BP on R gives C = 0 and R back

  bool all() const {
    return counterterm_pure_pole && renormalized_regular && subtraction_vanishes &&
           convolution && birkhoff && idempotent;
  }
};

struct MultiplicativityCheck {
  Monomial a, b;
  bool counterterm = false;  // C(ab) = C(a) C(b)
  bool renormalized = false;
};

struct BPReport {
  std::map<std::string, GeneratorChecks> per_generator;
  std::vector<MultiplicativityCheck> multiplicativity;

  bool all() const {
    for (const auto &[id, c] : per_generator)
      if (!c.all()) return false;
    for (const auto &m : multiplicativity)
      if (!m.counterterm || !m.renormalized) return false;
    return true;
  }
};

/// Runs every identity of the BP/Birkhoff picture on `result`, plus the
/// multiplicativity of C and R on the given monomial pairs.
template <class C>
BPReport check_bp(const HopfAlgebra &h, const Character<C> &f, const BPResult<C> &result,
                  const std::vector<std::pair<Monomial, Monomial>> &pairs = {},
                  const Scheme<C> &t = minimal_subtraction<C>()) {
  BPReport report;
  const auto again = bogoliubov(h, result.renormalized, t);
  const auto c = as_map(result.counterterm);
  const auto r = as_map(result.renormalized);
  const auto fm = as_map(f);
  const auto c_inv = inverse_map(h, result.counterterm);
  for (const auto &[id, g] : result.per_generator) {
    GeneratorChecks ck;
    const hopf::Element x = hopf::Element::generator(id);
    ck.counterterm_pure_pole = g.counterterm.is_pure_pole();
    ck.renormalized_regular = g.renormalized.is_regular();
    ck.subtraction_vanishes = t(g.renormalized).is_zero();
    ck.convolution = hopf::convolve(h, c, fm, x, f.zero()).agrees_with(g.renormalized);
    ck.birkhoff = hopf::convolve(h, c_inv, r, x, f.zero()).agrees_with(f.at(id));
    const auto &a = again.per_generator.at(id);
    ck.idempotent = a.counterterm.is_zero() && a.renormalized.agrees_with(g.renormalized);
    report.per_generator.emplace(id, ck);
  }
  MonomialBP<C> mono(h, f, t);
  for (const auto &[a, b] : pairs) {
    const auto &ab = mono(hopf::operator*(a, b));
    MultiplicativityCheck m{a, b};
    m.counterterm = ab.counterterm.agrees_with(mono(a).counterterm * mono(b).counterterm);
    m.renormalized = ab.renormalized.agrees_with(mono(a).renormalized * mono(b).renormalized);
    report.multiplicativity.push_back(std::move(m));
  }
  return report;
}

/// Character JSON: {"truncation": K, "pole_bound": P, "values": {"g1":
/// <series>, ...}}. Series may omit their own K/P, inheriting the outer
/// ones. ValidationError with pointers on schema problems.
RCharacter character_from_json(const nlohmann::json &j);
nlohmann::json character_to_json(const RCharacter &x);

/// Checks that `x` has a value for every generator of `spec` (pointer
/// "/values/<id>" otherwise).
void require_complete(const RCharacter &x, const hopf::NestingSpec &spec);

/// JSON report for the CLI: per generator P, C, R, R at eps = 0 and checks.
nlohmann::json report_to_json(const BPResult<Rational> &result, const BPReport &report);

}  // namespace feynhopf::renorm

#endif  // FEYNHOPF_RENORM_HPP
