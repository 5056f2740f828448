#include "feynhopf/laurent.hpp"

namespace feynhopf {

TSeries exp_eps_poly(const TPoly &c, int truncation, int pole_bound) {
  if (truncation < 0) throw DomainError("negative truncation order");
  TSeries::term_map terms;
  TPoly power(Rational(1));
  for (int j = 0; j <= truncation; ++j) {
    terms.emplace(j, TPoly(Rational(1) / Rational(mpz_class(factorial(j)))) *
                         power);
    power = power * c;
  }
  return TSeries(std::move(terms), truncation, pole_bound);
}

TSeries lift_to_t(const RSeries &s) {
  return s.map_coefficients([](const Rational &r) { return TPoly(r); });
}

RSeries evaluate_t(const TSeries &s, const Rational &value) {
  return s.map_coefficients(
      [&](const TPoly &p) { return p.evaluate(value); });
}

}  // namespace feynhopf
