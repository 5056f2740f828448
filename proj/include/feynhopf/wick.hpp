#ifndef FEYNHOPF_WICK_HPP
#define FEYNHOPF_WICK_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "feynhopf/polynomial.hpp"
#include "feynhopf/rational.hpp"

namespace feynhopf::wick {

/// Dense square matrix of rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> d);

  std::size_t size() const { return n_; }
  Rational &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  bool is_symmetric() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Exact inverse by Gauss-Jordan elimination; DomainError if singular.
Matrix inverse(const Matrix &m);

/// Determinant of the leading k x k block, for each k (Bareiss-free, exact).
std::vector<Rational> leading_minors(const Matrix &m);

/// An element of V^*, in the dual of the standard basis.
using Covector = std::vector<Rational>;

/// Positive definite symmetric form B on V = Q^d (the free action is B/2).
/// The inverse is computed once at construction.
class BilinearForm {
 public:
  /// Throws DomainError unless `matrix` is symmetric with all leading
  /// principal minors positive.
  explicit BilinearForm(Matrix matrix);

  std::size_t dimension() const { return b_.size(); }
  const Matrix &matrix() const { return b_; }
  const Matrix &inverse_matrix() const { return inv_; }

  /// B^{-1}(f, g) = f . B^{-1} . g.
  Rational inverse_pairing(const Covector &f, const Covector &g) const;

 private:
  Matrix b_;
  Matrix inv_;
};

/// Perfect matching of {0..N-1}. Each pair has first < second and pairs are
/// ordered by their first element.
using Pairing = std::vector<std::pair<int, int>>;

/// Calls `visit` once per perfect matching of {0..n-1}, in canonical order:
/// the smallest unmatched index is paired with each remaining index in turn.
void for_each_pairing(int n, const std::function<void(const Pairing &)> &visit);

/// All (N-1)!! perfect matchings of {0..N-1}. DomainError for odd or
/// negative N.
std::vector<Pairing> enumerate_pairings(int n);

/// (N-1)!! for even N, 0 for odd N.
mpz_class pairing_count(int n);

/// <f_1 ... f_N>_free: sum over Wick pairings of products of B^{-1}(f_i, f_j).
/// Zero for odd N, one for N = 0. ShapeError on dimension mismatch.
Rational free_correlator(std::span<const Covector> forms, const BilinearForm &b);

/// <x^N> for the standard one-dimensional Gaussian: N!/(2^p p!) for N = 2p,
/// zero for odd N.
Rational moment_1d(int n);

/// Z(J) = exp(J^2/2) as a polynomial in J truncated at degree K.
TPoly perturbed_partition_1d(int truncation);

}  // namespace feynhopf::wick

#endif  // FEYNHOPF_WICK_HPP
