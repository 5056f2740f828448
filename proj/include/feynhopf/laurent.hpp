#ifndef FEYNHOPF_LAURENT_HPP
#define FEYNHOPF_LAURENT_HPP

#include <algorithm>
#include <climits>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "feynhopf/error.hpp"
#include "feynhopf/polynomial.hpp"
#include "feynhopf/rational.hpp"

namespace feynhopf {

inline constexpr int kDefaultTruncation = 16;
inline constexpr int kDefaultPoleBound = 8;

/// Truncated Laurent series in eps with coefficients in C (Rational or TPoly).
///
/// A series stands for  sum_{k=-P}^{K} a_k eps^k + O(eps^{K+1}).  The
/// truncation K records how far the coefficients are known exactly; products
/// with a pole lose precision and the result's K drops accordingly, so every
/// stored coefficient is exact. The pole bound P is a hard limit: a product
/// whose leading exponent falls below -P throws PoleOverflow.
template <class C>
class LaurentSeries {
 public:
  using coefficient_type = C;
  using term_map = std::map<int, C>;

  LaurentSeries() : LaurentSeries(kDefaultTruncation, kDefaultPoleBound) {}
  LaurentSeries(int truncation, int pole_bound)
      : truncation_(truncation), pole_bound_(pole_bound) {
    if (pole_bound < 0) throw DomainError("negative pole bound");
  }
  /// Terms above the truncation are dropped; terms below -P are an error.
  LaurentSeries(term_map terms, int truncation, int pole_bound)
      : LaurentSeries(truncation, pole_bound) {
    for (auto &[k, c] : terms) add_term(k, std::move(c));
  }

  static LaurentSeries constant(C c, int truncation = kDefaultTruncation,
                                int pole_bound = kDefaultPoleBound) {
    return monomial(std::move(c), 0, truncation, pole_bound);
  }
  static LaurentSeries one(int truncation = kDefaultTruncation,
                           int pole_bound = kDefaultPoleBound) {
    return constant(C(1), truncation, pole_bound);
  }
  static LaurentSeries monomial(C c, int exponent,
                                int truncation = kDefaultTruncation,
                                int pole_bound = kDefaultPoleBound) {
    LaurentSeries s(truncation, pole_bound);
    s.add_term(exponent, std::move(c));
    return s;
  }

  int truncation() const { return truncation_; }
  int pole_bound() const { return pole_bound_; }
  const term_map &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Lowest exponent with a nonzero coefficient; K+1 for the zero series
  /// (the error term is all that is known).
  int valuation() const {
    return terms_.empty() ? truncation_ + 1 : terms_.begin()->first;
  }

  /// Coefficient of eps^k. Asking beyond the known precision is an error.
  C coeff(int k) const {
    if (k > truncation_)
      throw DomainError("coefficient of eps^" + std::to_string(k) +
                        " requested but series is only known to order " +
                        std::to_string(truncation_));
    auto it = terms_.find(k);
    return it == terms_.end() ? C() : it->second;
  }

  /// True if no strictly negative exponent carries a nonzero coefficient.
  bool is_regular() const {
    return terms_.empty() || terms_.begin()->first >= 0;
  }
  /// True if every nonzero coefficient sits at a strictly negative exponent.
  bool is_pure_pole() const {
    return terms_.empty() || terms_.rbegin()->first < 0;
  }

  /// The pole part (minimal subtraction projection).
  LaurentSeries pole_part() const {
    LaurentSeries r(truncation_, pole_bound_);
    for (const auto &[k, c] : terms_)
      if (k < 0) r.terms_.emplace(k, c);
    return r;
  }
  LaurentSeries regular_part() const {
    LaurentSeries r(truncation_, pole_bound_);
    for (const auto &[k, c] : terms_)
      if (k >= 0) r.terms_.emplace(k, c);
    return r;
  }

  /// Copy with a lower truncation order (never raises it).
  LaurentSeries truncated(int truncation) const {
    LaurentSeries r(std::min(truncation, truncation_), pole_bound_);
    for (const auto &[k, c] : terms_)
      if (k <= r.truncation_) r.terms_.emplace(k, c);
    return r;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto &[k, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries &a,
                                 const LaurentSeries &b) {
    LaurentSeries r(std::min(a.truncation_, b.truncation_),
                    std::max(a.pole_bound_, b.pole_bound_));
    for (const auto *s : {&a, &b})
      for (const auto &[k, c] : s->terms_)
        if (k <= r.truncation_) r.accumulate(k, c);
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries &a,
                                 const LaurentSeries &b) {
    return a + (-b);
  }
  friend LaurentSeries operator*(const LaurentSeries &a,
                                 const LaurentSeries &b) {
    const int pole_bound = std::max(a.pole_bound_, b.pole_bound_);
    const int va = a.valuation(), vb = b.valuation();
    if (!a.is_zero() && !b.is_zero() && va + vb < -pole_bound)
      throw PoleOverflow("product has a pole of order " +
                         std::to_string(-(va + vb)) + " but pole bound is " +
                         std::to_string(pole_bound));
    const int known = std::min({a.truncation_ + vb, b.truncation_ + va,
                                std::max(a.truncation_, b.truncation_)});
    LaurentSeries r(known, pole_bound);
    for (const auto &[i, x] : a.terms_)
      for (const auto &[j, y] : b.terms_)
        if (i + j <= known) r.accumulate(i + j, x * y);
    return r;
  }
  LaurentSeries &operator+=(const LaurentSeries &o) { return *this = *this + o; }
  LaurentSeries &operator-=(const LaurentSeries &o) { return *this = *this - o; }
  LaurentSeries &operator*=(const LaurentSeries &o) { return *this = *this * o; }

  /// Scalar multiple (precision unchanged).
  friend LaurentSeries operator*(const C &s, const LaurentSeries &a) {
    LaurentSeries r(a.truncation_, a.pole_bound_);
    for (const auto &[k, c] : a.terms_) r.accumulate(k, s * c);
    return r;
  }

  /// Structural equality: same precision, bound and terms.
  friend bool operator==(const LaurentSeries &a, const LaurentSeries &b) {
    return a.truncation_ == b.truncation_ && a.pole_bound_ == b.pole_bound_ &&
           a.terms_ == b.terms_;
  }

  /// Equality of the coefficients both series know, i.e. up to the smaller
  /// truncation order. This is the meaning of identities "up to order K".
  bool agrees_with(const LaurentSeries &o) const {
    const int k = std::min(truncation_, o.truncation_);
    return truncated(k).terms_ == o.truncated(k).terms_;
  }

  /// Applies f to every coefficient (e.g. Rational -> TPoly lift, or
  /// evaluation of TPoly coefficients at a point).
  template <class F>
  auto map_coefficients(F &&f) const
      -> LaurentSeries<std::decay_t<decltype(f(std::declval<const C &>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C &>()))>;
    typename LaurentSeries<D>::term_map out;
    for (const auto &[k, c] : terms_) out.emplace(k, f(c));
    return LaurentSeries<D>(std::move(out), truncation_, pole_bound_);
  }

 private:
  void add_term(int k, C c) {
    if (k > truncation_) return;
    if (k < -pole_bound_ && !feynhopf::is_zero(c))
      throw PoleOverflow("term eps^" + std::to_string(k) +
                         " exceeds pole bound " + std::to_string(pole_bound_));
    accumulate(k, c);
  }
  void accumulate(int k, const C &c) {
    if (feynhopf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (feynhopf::is_zero(it->second)) terms_.erase(it);
    }
  }

  term_map terms_;
  int truncation_;
  int pole_bound_;
};

template <class C>
bool is_zero(const LaurentSeries<C> &s) {
  return s.is_zero();
}

using RSeries = LaurentSeries<Rational>;
using TSeries = LaurentSeries<TPoly>;

/// Minimal subtraction: the part with strictly negative exponents.
template <class C>
LaurentSeries<C> ms_project(const LaurentSeries<C> &a) {
  return a.pole_part();
}

/// exp(c * eps) truncated at eps^K, with c a polynomial in t.
TSeries exp_eps_poly(const TPoly &c, int truncation,
                     int pole_bound = kDefaultPoleBound);

/// Lifts rational coefficients to constant polynomials in t.
TSeries lift_to_t(const RSeries &s);

/// Evaluates every TPoly coefficient at t = value.
RSeries evaluate_t(const TSeries &s, const Rational &value);

template <class C>
std::ostream &operator<<(std::ostream &os, const LaurentSeries<C> &s) {
  if (s.is_zero()) os << "0";
  bool first = true;
  for (const auto &[k, c] : s.terms()) {
    os << (first ? "" : " + ") << "(" << c << ")e^" << k;
    first = false;
  }
  return os << " + O(e^" << s.truncation() + 1 << ")";
}

}  // namespace feynhopf

#endif  // FEYNHOPF_LAURENT_HPP
