#ifndef FEYNHOPF_POLYNOMIAL_HPP
#define FEYNHOPF_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "feynhopf/rational.hpp"

namespace feynhopf {

inline bool is_zero(const Rational &r) { return r.is_zero(); }

template <class C>
class Polynomial;
template <class C>
bool is_zero(const Polynomial<C> &p);

/// Dense univariate polynomial over a commutative ring C.
///
/// Coefficients are indexed by degree and kept trimmed (no trailing zeros),
/// so the zero polynomial has an empty coefficient list and structural
/// equality is ring equality. Nesting Polynomial<Polynomial<Rational>> gives
/// the two-variable polynomials used by the group-law check.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  Polynomial(C constant) {  // NOLINT(google-explicit-constructor)
    if (!feynhopf::is_zero(constant)) c_.push_back(std::move(constant));
  }
  Polynomial(int constant) : Polynomial(C(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  /// The monomial coeff * x^k.
  static Polynomial monomial(C coeff, std::size_t k) {
    std::vector<C> v(k + 1);
    v[k] = std::move(coeff);
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(C(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C> &coefficients() const { return c_; }

  /// Coefficient of x^k (zero beyond the degree).
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C(); }
  C constant_term() const { return coeff(0); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto &x : r.c_) x = -x;
    return r;
  }
  Polynomial &operator+=(const Polynomial &o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.c_ == b.c_;
  }

  /// Horner evaluation at x, in any ring that C multiplies into.
  template <class R>
  R evaluate(const R &x) const {
    R acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + R(*it);
    return acc;
  }

  /// Composition p(q(x)).
  Polynomial compose(const Polynomial &q) const { return evaluate(q); }

  /// Exact formal derivative.
  Polynomial derivative() const {
    std::vector<C> r;
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * C(static_cast<long>(i)));
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && feynhopf::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const Polynomial<C> &p) {
  return p.is_zero();
}

/// Polynomial in the scale parameter t.
using TPoly = Polynomial<Rational>;
/// Polynomial in a second parameter s with TPoly coefficients.
using TSPoly = Polynomial<TPoly>;

template <class C>
std::ostream &operator<<(std::ostream &os, const Polynomial<C> &p) {
  os << '[';
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    os << (i ? ", " : "") << p.coefficients()[i];
  return os << ']';
}

}  // namespace feynhopf

#endif  // FEYNHOPF_POLYNOMIAL_HPP
