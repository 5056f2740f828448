#ifndef FEYNHOPF_HOPF_HPP
#define FEYNHOPF_HOPF_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "feynhopf/graph.hpp"
#include "feynhopf/rational.hpp"
#include "json.hpp"

namespace feynhopf::hopf {

/// A commutative monomial: generator ids, sorted, with repetition. The empty
/// monomial is the unit.
using Monomial = std::vector<std::string>;

Monomial make_monomial(std::vector<std::string> ids);
Monomial operator*(const Monomial &a, const Monomial &b);

struct Subdivergence {
  Monomial sub;
  std::string cograph;
};

struct Generator {
  std::string id;
  int degree = 1;
  std::vector<Subdivergence> subdivergences;
  std::optional<graph::FeynmanGraph> graph;
};

/// Validated set of generators. Construction throws ValidationError (with
/// a pointer into the equivalent JSON document) on duplicate or unknown
/// ids, cyclic nesting, degree < 1, or deg(sub) + deg(cograph) != deg.
class NestingSpec {
 public:
  NestingSpec() = default;
  explicit NestingSpec(std::vector<Generator> generators);

  const std::vector<Generator> &generators() const { return generators_; }
  bool contains(const std::string &id) const { return index_.count(id) > 0; }
  const Generator &generator(const std::string &id) const;
  /// Generator ids by increasing degree (ties by input order).
  const std::vector<std::string> &by_degree() const { return by_degree_; }
  int degree(const std::string &id) const { return generator(id).degree; }
  int degree(const Monomial &m) const;

 private:
  std::vector<Generator> generators_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> by_degree_;
};

NestingSpec nesting_from_json(const nlohmann::json &j);
nlohmann::json nesting_to_json(const NestingSpec &spec);

/// Finite linear combination of monomials; zero coefficients are never
/// stored, so == is equality in H.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;
  Element(const Monomial &m, Rational c = 1) { add(m, std::move(c)); }  // NOLINT
  static Element unit() { return Element(Monomial{}); }
  static Element generator(const std::string &id) { return Element(Monomial{id}); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial &m) const;
  void add(const Monomial &m, const Rational &c);

  Element operator-() const;
  friend Element operator+(Element a, const Element &b);
  friend Element operator-(Element a, const Element &b) { return a + (-b); }
  friend Element operator*(const Element &a, const Element &b);
  friend Element operator*(const Rational &s, const Element &a);
  Element &operator+=(const Element &o) { return *this = *this + o; }
  friend bool operator==(const Element &a, const Element &b) = default;

 private:
  Terms terms_;
};

/// Element of H (x) H.
class Tensor {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, Rational>;

  Tensor() = default;
  Tensor(const Monomial &l, const Monomial &r, Rational c = 1) { add(l, r, std::move(c)); }

  const Terms &terms() const { return terms_; }
  void add(const Monomial &l, const Monomial &r, const Rational &c);

  friend Tensor operator+(Tensor a, const Tensor &b);
  friend Tensor operator*(const Tensor &a, const Tensor &b);
  friend Tensor operator*(const Rational &s, const Tensor &a);
  friend bool operator==(const Tensor &a, const Tensor &b) = default;

 private:
  Terms terms_;
};

/// Element of H (x) H (x) H, for coassociativity.
using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>;

/// The Hopf algebra generated by a NestingSpec. Results on generators and
/// monomials are memoized, so one instance should be reused.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(NestingSpec spec) : spec_(std::move(spec)) {}

  const NestingSpec &spec() const { return spec_; }
  int degree(const Monomial &m) const { return spec_.degree(m); }

  const Tensor &coproduct(const Monomial &m) const;
  Tensor coproduct(const Element &x) const;
  /// Reduced coproduct: Delta(m) - m (x) 1 - 1 (x) m (m of degree >= 1).
  Tensor reduced_coproduct(const Monomial &m) const;

  static Rational counit(const Element &x) { return x.coeff({}); }

  /// S(G) = -G - sum S(gamma) (G/gamma), multiplicative.
  const Element &antipode_recursive(const Monomial &m) const;
  Element antipode_recursive(const Element &x) const;

  /// u_k(m) with u_0 = eta eps and u_{k+1} = (eta eps - id) * u_k.
  const Element &geometric_term(int k, const Monomial &m) const;
  /// sum_{k <= deg} u_k.
  Element antipode_geometric(const Element &x) const;

  /// (Delta (x) id) Delta and (id (x) Delta) Delta.
  Triple coassociativity_left(const Element &x) const;
  Triple coassociativity_right(const Element &x) const;

 private:
  void check_known(const Monomial &m) const;

  NestingSpec spec_;
  mutable std::map<Monomial, Tensor> coproduct_memo_;
  mutable std::map<Monomial, Element> antipode_memo_;
  mutable std::map<std::pair<int, Monomial>, Element> geometric_memo_;
};

/// (f * g)(x) = m_A (f (x) g) Delta(x) for maps defined on monomials.
/// `zero` is the additive identity of A, which also fixes precision data
/// for series-valued targets.
template <class A>
A convolve(const HopfAlgebra &h, const std::function<A(const Monomial &)> &f,
           const std::function<A(const Monomial &)> &g, const Element &x, A zero) {
  A total = zero;
  for (const auto &[m, c] : x.terms())
    for (const auto &[key, k] : h.coproduct(m).terms())
      total = total + (c * k) * (f(key.first) * g(key.second));
  return total;
}

/// Extends per-generator values multiplicatively to a monomial.
template <class A>
A multiplicative(const Monomial &m, const std::function<A(const std::string &)> &value,
                 A one) {
  A out = one;
  for (const auto &id : m) out = out * value(id);
  return out;
}

/// Outcome of the axiom checks on one element.
struct AxiomReport {
  bool coassociative = false;
  bool counit_left = false;
  bool counit_right = false;
  bool antipode_left = false;   // m(S (x) id) Delta = u eps, recursive S
  bool antipode_right = false;  // m(id (x) S) Delta = u eps, recursive S
  bool geometric_left = false;  // same with the geometric S
  bool geometric_right = false;
  bool antipodes_agree = false;
  bool graded = false;          // every Delta term splits the degree
  bool reduced_shape = false;   // reduced legs have degree in [1, deg - 1]
  bool involution = false;      // S(S(x)) = x
  bool terminates = false;      // u_{deg+1}(x) = 0

  bool all() const;
};

AxiomReport check_axioms(const HopfAlgebra &h, const Element &x);

nlohmann::json element_to_json(const Element &x);
nlohmann::json tensor_to_json(const Tensor &t);

/// Builds a NestingSpec from connected 1PI graphs. Subdivergences are
/// vertex-induced subgraphs whose components are 1PI with loop number >= 1
/// and accepted by `divergent`; cographs come from contraction and are added
/// as generators themselves. Generators are identified up to isomorphism
/// with unlabeled legs and get ids "G1", "G2", ... in discovery order;
/// degree is the loop number.
NestingSpec nesting_from_graphs(const std::vector<graph::FeynmanGraph> &graphs,
                                const std::function<bool(const graph::FeynmanGraph &)> &divergent);

}  // namespace feynhopf::hopf

#endif  // FEYNHOPF_HOPF_HPP
