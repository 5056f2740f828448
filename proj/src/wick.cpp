#include "feynhopf/wick.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "feynhopf/error.hpp"

namespace feynhopf::wick {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : Matrix(rows.size()) {
  std::size_t i = 0;
  for (const auto &row : rows) {
    if (row.size() != n_) throw ShapeError("matrix rows must have equal length");
    std::size_t j = 0;
    for (const auto &x : row) (*this)(i, j++) = x;
    ++i;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix inverse(const Matrix &m) {
  const std::size_t n = m.size();
  Matrix a = m, inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> leading_minors(const Matrix &m) {
  // Gaussian elimination without row swaps: the k-th leading minor is the
  // product of the first k pivots. A zero pivot means that minor vanishes;
  // later minors are then computed directly.
  const std::size_t n = m.size();
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix a(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = m(i, j);
    Rational det = 1;
    for (std::size_t col = 0; col < k && !det.is_zero(); ++col) {
      std::size_t pivot = col;
      while (pivot < k && a(pivot, col).is_zero()) ++pivot;
      if (pivot == k) {
        det = 0;
        break;
      }
      if (pivot != col) {
        for (std::size_t j = 0; j < k; ++j) std::swap(a(pivot, j), a(col, j));
        det = -det;
      }
      det *= a(col, col);
      for (std::size_t r = col + 1; r < k; ++r) {
        const Rational f = a(r, col) / a(col, col);
        for (std::size_t j = col; j < k; ++j) a(r, j) -= f * a(col, j);
      }
    }
    minors.push_back(det);
  }
  return minors;
}

BilinearForm::BilinearForm(Matrix matrix) : b_(std::move(matrix)) {
  if (b_.size() == 0) throw DomainError("bilinear form of dimension 0");
  if (!b_.is_symmetric()) throw DomainError("bilinear form is not symmetric");
  const auto minors = leading_minors(b_);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (minors[k].sign() <= 0)
      throw DomainError("bilinear form is not positive definite (leading minor " +
                        std::to_string(k + 1) + " is " + minors[k].str() + ")");
  inv_ = inverse(b_);
}

Rational BilinearForm::inverse_pairing(const Covector &f,
                                       const Covector &g) const {
  const std::size_t d = dimension();
  if (f.size() != d || g.size() != d)
    throw ShapeError("covector length does not match dimension " +
                     std::to_string(d));
  Rational s;
  for (std::size_t i = 0; i < d; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!g[j].is_zero() && !inv_(i, j).is_zero()) s += f[i] * inv_(i, j) * g[j];
  }
  return s;
}

namespace {

void pairings_rec(std::vector<char> &used, Pairing &current,
                  const std::function<void(const Pairing &)> &visit) {
  const int n = static_cast<int>(used.size());
  int first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    visit(current);
    return;
  }
  used[first] = 1;
  for (int partner = first + 1; partner < n; ++partner) {
    if (used[partner]) continue;
    used[partner] = 1;
    current.emplace_back(first, partner);
    pairings_rec(used, current, visit);
    current.pop_back();
    used[partner] = 0;
  }
  used[first] = 0;
}

}  // namespace

void for_each_pairing(int n, const std::function<void(const Pairing &)> &visit) {
  if (n < 0 || n % 2 != 0)
    throw DomainError("perfect matchings need an even, non-negative count, got " +
                      std::to_string(n));
  std::vector<char> used(n, 0);
  Pairing current;
  current.reserve(n / 2);
  pairings_rec(used, current, visit);
}

std::vector<Pairing> enumerate_pairings(int n) {
  std::vector<Pairing> out;
  for_each_pairing(n, [&](const Pairing &p) { out.push_back(p); });
  return out;
}

mpz_class pairing_count(int n) {
  if (n < 0 || n % 2 != 0) return 0;
  mpz_class c = 1;
  for (int k = n - 1; k > 1; k -= 2) c *= k;
  return c;
}

Rational free_correlator(std::span<const Covector> forms,
                         const BilinearForm &b) {
  const std::size_t n = forms.size();
  for (const auto &f : forms)
    if (f.size() != b.dimension())
      throw ShapeError("form of length " + std::to_string(f.size()) +
                       " against a form of dimension " +
                       std::to_string(b.dimension()));
  if (n % 2 != 0) return Rational(0);

  std::vector<Rational> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gram[i * n + j] = b.inverse_pairing(forms[i], forms[j]);

  if (n > 62) throw DomainError("free correlator of more than 62 forms");

  // Pairing sum by expanding along the lowest unmatched slot, memoized on the
  // set of unmatched slots.
  std::unordered_map<std::uint64_t, Rational> memo;
  std::function<Rational(std::uint64_t)> sum = [&](std::uint64_t left) -> Rational {
    if (left == 0) return Rational(1);
    auto it = memo.find(left);
    if (it != memo.end()) return it->second;
    const int i = std::countr_zero(left);
    const std::uint64_t rest = left & (left - 1);
    Rational total;
    for (std::uint64_t r = rest; r; r &= r - 1) {
      const int j = std::countr_zero(r);
      const Rational &g = gram[i * n + j];
      if (!g.is_zero()) total += g * sum(rest & ~(std::uint64_t{1} << j));
    }
    return memo.emplace(left, total).first->second;
  };
  return sum(n == 0 ? 0 : (std::uint64_t{1} << n) - 1);
}

Rational moment_1d(int n) {
  if (n < 0) throw DomainError("negative moment order");
  if (n % 2 != 0) return Rational(0);
  const unsigned p = static_cast<unsigned>(n / 2);
  mpz_class den = factorial(p);
  den <<= p;
  return Rational(mpq_class(factorial(static_cast<unsigned>(n)), den));
}

TPoly perturbed_partition_1d(int truncation) {
  if (truncation < 0) throw DomainError("negative truncation order");
  std::vector<Rational> c(truncation + 1);
  for (int i = 0; 2 * i <= truncation; ++i) {
    mpz_class den = factorial(static_cast<unsigned>(i));
    den <<= static_cast<unsigned>(i);
    c[2 * i] = Rational(mpq_class(1, den));
  }
  return TPoly(std::move(c));
}

}  // namespace feynhopf::wick
