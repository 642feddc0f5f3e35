#pragma once

// Exact integer building blocks: binomials, fraction-free determinants,
// Vandermonde products, the Schubert degree formula and a list extended gcd.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sbmotive/errors.hpp"

namespace sbmotive {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) {
  if (s.empty()) throw ContractError("empty decimal string");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw ContractError("not a decimal integer: '" + s + "'");
  return BigInt(s);
}

/// Floor modulus: result in [0, n) for n > 0.
inline BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline BigInt factorial(long long n) {
  detail::require(n >= 0, "factorial of a negative number");
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// C(n, k), with the convention C(n, k) = 0 whenever k < 0, k > n or n < 0.
inline BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Dense row-major matrix of BigInt.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
/// Every division in the inner loop is exact. The 0x0 determinant is 1.
inline BigInt determinant(IntMatrix m) {
  if (!m.square())
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// det [ C(rows_i, cols_j) ].
inline BigInt binomial_determinant(std::span<const long long> row_indices,
                                   std::span<const long long> col_indices) {
  if (row_indices.size() != col_indices.size())
    throw DimensionError("binomial determinant needs equal-length index lists");
  const std::size_t k = row_indices.size();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = binomial(row_indices[i], col_indices[j]);
  return determinant(std::move(m));
}

inline BigInt binomial_determinant(const std::vector<long long>& rows,
                                   const std::vector<long long>& cols) {
  return binomial_determinant(std::span<const long long>(rows),
                              std::span<const long long>(cols));
}

/// prod_{i<j} (a_j - a_i).
inline BigInt vandermonde(std::span<const long long> a) {
  BigInt r = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) r *= a[j] - a[i];
  return r;
}

inline BigInt vandermonde(const std::vector<long long>& a) {
  return vandermonde(std::span<const long long>(a));
}

/// 0! 1! ... (d-1)!
inline BigInt superfactorial(long long d) {
  BigInt r = 1;
  for (long long j = 2; j < d; ++j) r *= factorial(j);
  return r;
}

/// Degree of the Schubert class with jump sequence a against the m-th power of
/// the hyperplane class: m! / (a_0! ... a_{d-1}!) * prod_{i>j} (a_i - a_j).
///
/// The value is computed as a reduced rational and must come out integral.
inline BigInt degree_coefficient(long long m, std::span<const long long> a) {
  long long excess = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    detail::require(a[i] >= 0, "degree_coefficient: negative jump");
    detail::require(i == 0 || a[i] > a[i - 1],
                    "degree_coefficient: jumps must be strictly increasing");
    excess += a[i] - static_cast<long long>(i);
  }
  detail::require(excess == m, "degree_coefficient: sum(a_i - i) must equal m");
  BigInt denom = 1;
  for (long long ai : a) denom *= factorial(ai);
  BigRational q(factorial(m) * vandermonde(a), denom);
  detail::ensure(boost::multiprecision::denominator(q) == 1,
                 "degree_coefficient: non-integral degree");
  return boost::multiprecision::numerator(q);
}

inline BigInt degree_coefficient(long long m, const std::vector<long long>& a) {
  return degree_coefficient(m, std::span<const long long>(a));
}

struct GcdCombination {
  BigInt g;               ///< gcd, always >= 1
  std::vector<BigInt> x;  ///< sum a_i x_i == g
};

namespace detail {

/// Two-term extended Euclid: returns (g, u, v) with u a + v b = g.
inline std::tuple<BigInt, BigInt, BigInt> ext_euclid(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace detail

/// Bezout coefficients for a list, by left-folding the two-term extended
/// Euclid: g_1 = gcd(a_0, a_1), g_2 = gcd(g_1, a_2), ... Deterministic.
inline GcdCombination extended_gcd_list(std::span<const BigInt> a) {
  detail::require(!a.empty(), "extended_gcd_list: empty input");
  GcdCombination out;
  out.g = a[0] < 0 ? BigInt(-a[0]) : a[0];
  out.x.push_back(a[0] < 0 ? -1 : 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    auto [g, u, v] = detail::ext_euclid(out.g, a[i]);
    for (auto& xi : out.x) xi *= u;
    out.x.push_back(v);
    out.g = g;
  }
  detail::require(out.g != 0, "extended_gcd_list: all inputs are zero");
  return out;
}

inline GcdCombination extended_gcd_list(const std::vector<BigInt>& a) {
  return extended_gcd_list(std::span<const BigInt>(a));
}

}  // namespace sbmotive
