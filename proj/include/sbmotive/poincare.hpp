#pragma once

// Dense integer polynomials in t, Gaussian binomials (Poincare polynomials of
// Grassmannians) and exact divisibility over Z.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbmotive/errors.hpp"
#include "sbmotive/exactmath.hpp"

namespace sbmotive {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial monomial(std::size_t k, const BigInt& coeff = 1) {
    std::vector<BigInt> c(k + 1);
    c[k] = coeff;
    return IntPolynomial(std::move(c));
  }

  /// 1 - t^k
  static IntPolynomial one_minus_t_pow(std::size_t k) {
    return IntPolynomial{1} - monomial(k);
  }

  [[nodiscard]] const std::vector<BigInt>& coefficients() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  [[nodiscard]] bool is_palindromic() const {
    return std::equal(c_.begin(), c_.end(), c_.rbegin());
  }

  /// "[1, 1, 2, 1, 1]", low degree first.
  [[nodiscard]] std::string to_array_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + "]";
  }

  /// "t^4 + t^3 + 2t^2 + t + 1", high degree first.
  [[nodiscard]] std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const BigInt& v = c_[k];
      if (v == 0) continue;
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      const BigInt a = v < 0 ? BigInt(-v) : v;
      if (a != 1 || k == 0) s += a.str();
      if (k >= 1) s += "t";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Quotient q with q * p = q_in exactly over Z, or nothing.
inline std::optional<IntPolynomial> divides(const IntPolynomial& p, const IntPolynomial& q) {
  detail::require(!p.is_zero(), "divides: division by the zero polynomial");
  if (q.is_zero()) return IntPolynomial{};
  if (q.degree() < p.degree()) return std::nullopt;
  std::vector<BigInt> rem = q.coefficients();
  const auto& pc = p.coefficients();
  const std::size_t dp = pc.size() - 1;
  std::vector<BigInt> quot(rem.size() - dp);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dp];
    if (top % pc[dp] != 0) return std::nullopt;
    quot[k] = top / pc[dp];
    for (std::size_t i = 0; i <= dp; ++i) rem[k + i] -= quot[k] * pc[i];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& v) { return v != 0; }))
    return std::nullopt;
  return IntPolynomial(std::move(quot));
}

/// The Gaussian binomial [n choose d]_t, the Poincare polynomial of Gr_d(n):
/// prod_{i=1}^{d} (1 - t^{n-d+i}) / (1 - t^i), one exact division per factor.
inline IntPolynomial gaussian_binomial(int n, int d) {
  detail::require(d >= 0 && d <= n, "gaussian_binomial: need 0 <= d <= n");
  IntPolynomial acc{1};
  for (int i = 1; i <= d; ++i) {
    auto q = divides(IntPolynomial::one_minus_t_pow(static_cast<std::size_t>(i)),
                     acc * IntPolynomial::one_minus_t_pow(static_cast<std::size_t>(n - d + i)));
    detail::ensure(q.has_value(), "gaussian_binomial: inexact division");
    acc = std::move(*q);
  }
  return acc;
}

/// Poincare polynomial of P^{n-1}: 1 + t + ... + t^{n-1}.
inline IntPolynomial projective_poincare(int n) { return gaussian_binomial(n, 1); }

/// Coefficients of P(Gr_d(n)) / P(P^{n-1}); the quotient exists iff gcd(d, n) = 1.
inline std::vector<BigInt> modn_multiplicities(int n, int d) {
  detail::require(n >= 1 && d >= 0 && d <= n, "modn_multiplicities: need 0 <= d <= n");
  auto q = divides(projective_poincare(n), gaussian_binomial(n, d));
  if (!q)
    throw DivisibilityError("P(P^" + std::to_string(n - 1) + ") does not divide P(Gr_" +
                            std::to_string(d) + "(" + std::to_string(n) + "))");
  return q->coefficients();
}

}  // namespace sbmotive
