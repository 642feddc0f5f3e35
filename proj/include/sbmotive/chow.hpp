#pragma once

// Chow rings of P^{n-1} and Gr_d(n) in the Schubert basis, and of products of
// such spaces in the tensor-product basis.
//
// A projective factor P^{n-1} is handled as Gr_1(n): the hyperplane power H^i
// is the Schubert class of the one-row partition (i). Sign conventions:
// c_1(tau_1) = -H, so c_1(tau_1^{(x)r}) = -rH; c_i(kappa_d) = omega_(i) and
// Delta_mu(c(kappa_d)) = omega_mu (Giambelli).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "sbmotive/errors.hpp"
#include "sbmotive/exactmath.hpp"
#include "sbmotive/partitions.hpp"

namespace sbmotive {

enum class FactorKind { projective, grassmannian };

/// One irreducible factor: P^{n-1} or Gr_d(n).
struct Factor {
  FactorKind kind = FactorKind::projective;
  int d = 1;
  int n = 2;

  static Factor projective(int n) {
    detail::require(n >= 2, "projective space P^{n-1} needs n >= 2");
    return {FactorKind::projective, 1, n};
  }
  static Factor grassmannian(int d, int n) {
    detail::require(n >= 2 && d >= 1 && d <= n - 1, "Gr_d(n) needs 1 <= d <= n-1");
    return {FactorKind::grassmannian, d, n};
  }

  [[nodiscard]] BoxContext box() const { return {d, n - d}; }
  [[nodiscard]] int dimension() const { return d * (n - d); }
  [[nodiscard]] bool is_projective() const { return kind == FactorKind::projective; }

  [[nodiscard]] std::string to_string() const {
    return is_projective() ? "P^" + std::to_string(n - 1)
                           : "Gr(" + std::to_string(d) + "," + std::to_string(n) + ")";
  }

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A product of factors; a single factor is the common case.
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<Factor> factors) : factors_(std::move(factors)) {}

  static Space projective(int n) { return Space({Factor::projective(n)}); }
  static Space grassmannian(int d, int n) { return Space({Factor::grassmannian(d, n)}); }
  static Space product(const Space& a, const Space& b) {
    std::vector<Factor> f(a.factors_);
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return Space(std::move(f));
  }

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] std::size_t size() const { return factors_.size(); }
  [[nodiscard]] const Factor& factor(std::size_t i) const { return factors_.at(i); }

  [[nodiscard]] int dimension() const {
    int s = 0;
    for (const auto& f : factors_) s += f.dimension();
    return s;
  }

  /// The first k factors / the factors after the first k.
  [[nodiscard]] Space head(std::size_t k) const {
    return Space({factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(k)});
  }
  [[nodiscard]] Space tail(std::size_t k) const {
    return Space({factors_.begin() + static_cast<std::ptrdiff_t>(k), factors_.end()});
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += " x ";
      s += factors_[i].to_string();
    }
    return s;
  }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::vector<Factor> factors_;
};

/// One Schubert partition per factor; H^i on a projective factor is (i).
using Monomial = std::vector<Partition>;

inline Partition hyperplane_power(int i) { return Partition{i}; }

inline int monomial_codim(const Monomial& m) {
  int c = 0;
  for (const auto& p : m) c += p.weight();
  return c;
}

inline std::string monomial_to_string(const Space& space, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += "x";
    if (space.factor(i).is_projective())
      s += "H^" + std::to_string(m[i].weight());
    else
      s += "w" + m[i].to_string();
  }
  return s;
}

/// Finite integer combination of basis monomials of one codimension.
class CycleClass {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  CycleClass(Space space, int codim) : space_(std::move(space)), codim_(codim) {}

  static CycleClass unit(const Space& space) {
    CycleClass c(space, 0);
    c.add(Monomial(space.size()), 1);
    return c;
  }

  static CycleClass basis(const Space& space, const Monomial& m, const BigInt& coeff = 1) {
    CycleClass c(space, monomial_codim(m));
    c.add(m, coeff);
    return c;
  }

  [[nodiscard]] const Space& space() const { return space_; }
  [[nodiscard]] int codim() const { return codim_; }
  [[nodiscard]] const TermMap& terms() const& { return terms_; }
  // by value on temporaries so `for (... : make_class().terms())` stays valid
  [[nodiscard]] TermMap terms() && { return std::move(terms_); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] BigInt coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Adds coeff * m; the monomial must belong to this space and codimension.
  void add(const Monomial& m, const BigInt& coeff) {
    validate(m);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void set(const Monomial& m, const BigInt& coeff) {
    validate(m);
    if (coeff == 0)
      terms_.erase(m);
    else
      terms_[m] = coeff;
  }

  CycleClass& operator+=(const CycleClass& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  CycleClass& operator-=(const CycleClass& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  CycleClass& operator*=(const BigInt& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
  friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
  friend CycleClass operator*(const BigInt& k, CycleClass a) { return a *= k; }

  /// Same space, same terms. Zero classes compare equal regardless of codim.
  friend bool operator==(const CycleClass& a, const CycleClass& b) {
    if (!(a.space_ == b.space_) || a.terms_ != b.terms_) return false;
    return a.terms_.empty() || a.codim_ == b.codim_;
  }

  /// Every coefficient of (this - other) divisible by n.
  [[nodiscard]] bool congruent_mod(const CycleClass& other, const BigInt& n) const {
    auto diff = *this - other;
    for (const auto& [m, c] : diff.terms_)
      if (c % n != 0) return false;
    return true;
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      first = false;
      BigInt a = c < 0 ? BigInt(-c) : c;
      if (a != 1) s += a.str() + "*";
      s += monomial_to_string(space_, m);
    }
    return s;
  }

 private:
  void validate(const Monomial& m) const {
    detail::require(m.size() == space_.size(), "monomial has the wrong number of factors for " +
                                                   space_.to_string());
    for (std::size_t i = 0; i < m.size(); ++i)
      detail::require(space_.factor(i).box().fits(m[i]),
                      "monomial factor " + m[i].to_string() + " outside the Schubert box of " +
                          space_.factor(i).to_string());
    detail::require(monomial_codim(m) == codim_,
                    "monomial codimension " + std::to_string(monomial_codim(m)) +
                        " does not match class codimension " + std::to_string(codim_));
  }

  void check_compatible(const CycleClass& o) {
    detail::require(space_ == o.space_, "cycle classes live on different spaces");
    detail::require(codim_ == o.codim_ || o.is_zero() || is_zero(),
                    "cycle classes have different codimensions");
    if (is_zero() && !o.is_zero()) codim_ = o.codim_;
  }

  Space space_;
  int codim_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Pieri

namespace detail {

/// Partitions obtained from mu by adding one box inside the box.
inline std::vector<Partition> add_one_box(const Partition& mu, const BoxContext& box) {
  auto p = mu.padded(static_cast<std::size_t>(box.rows));
  std::vector<Partition> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= box.width) continue;
    if (i > 0 && p[i - 1] <= p[i]) continue;
    ++p[i];
    out.emplace_back(p);
    --p[i];
  }
  return out;
}

}  // namespace detail

/// omega_1 * omega_mu on Gr_d(n): the sum of omega_nu over nu = mu + one box.
inline CycleClass pieri_omega1(const Partition& mu, int d, int n) {
  const auto space = Space::grassmannian(d, n);
  const auto box = space.factor(0).box();
  detail::require_fits(mu, box);
  CycleClass out(space, mu.weight() + 1);
  for (auto& nu : detail::add_one_box(mu, box)) out.add({nu}, 1);
  return out;
}

namespace detail {

/// ω_1 times every term of a class on a single factor.
inline CycleClass pieri_apply(const CycleClass& c) {
  const auto& f = c.space().factor(0);
  CycleClass out(c.space(), c.codim() + 1);
  for (const auto& [m, coeff] : c.terms())
    for (auto& nu : add_one_box(m[0], f.box())) out.add({nu}, coeff);
  return out;
}

/// Memoized powers of ω_1 per (d, n). Readers share the lock; the table only
/// grows under the exclusive lock.
class PieriPowerCache {
 public:
  static PieriPowerCache& instance() {
    static PieriPowerCache cache;
    return cache;
  }

  CycleClass power(int m, const Factor& f) {
    const auto key = std::make_pair(f.d, f.n);
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(key);
      if (it != tables_.end() && static_cast<int>(it->second.size()) > m) return it->second[m];
    }
    std::unique_lock lock(mutex_);
    auto& table = tables_[key];
    if (table.empty()) table.push_back(CycleClass::unit(Space({f})));
    while (static_cast<int>(table.size()) <= m) table.push_back(pieri_apply(table.back()));
    return table[static_cast<std::size_t>(m)];
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::vector<CycleClass>> tables_;
};

}  // namespace detail

/// omega_1^m on Gr_d(n) in the Schubert basis; the coefficient of omega_rho
/// is c_rho^{(m)}. Zero for m beyond the dimension.
inline CycleClass omega1_power(int m, int d, int n) {
  detail::require(m >= 0, "omega1_power: negative exponent");
  const auto f = Factor::grassmannian(d, n);
  if (m > f.dimension()) return CycleClass(Space({f}), m);
  return detail::PieriPowerCache::instance().power(m, f);
}

// ---------------------------------------------------------------------------
// Degree and products

/// Coefficient of the point class; 0 unless the class has top codimension.
inline BigInt degree(const CycleClass& c) {
  if (c.codim() != c.space().dimension()) return 0;
  Monomial top;
  for (const auto& f : c.space().factors()) top.push_back(f.box().full());
  return c.coefficient(top);
}

namespace detail {

/// Product of two Schubert basis elements of one factor, when one of the
/// supported rules applies.
inline std::optional<std::map<Partition, BigInt>> basis_product(const Factor& f,
                                                                const Partition& x,
                                                                const Partition& y) {
  std::map<Partition, BigInt> out;
  const int total = x.weight() + y.weight();
  if (total > f.dimension()) return out;
  if (x.empty()) return std::map<Partition, BigInt>{{y, 1}};
  if (y.empty()) return std::map<Partition, BigInt>{{x, 1}};
  const auto box = f.box();
  if (f.is_projective()) return std::map<Partition, BigInt>{{hyperplane_power(total), 1}};
  if (total == f.dimension()) {
    if (y == dual_in_box(x, box)) out.emplace(box.full(), 1);
    return out;
  }
  const Partition one{1};
  if (x == one || y == one) {
    for (auto& nu : add_one_box(x == one ? y : x, box)) out.emplace(std::move(nu), 1);
    return out;
  }
  return std::nullopt;
}

/// If c (on a single Grassmannian) is k * omega_1^codim, returns k.
inline std::optional<BigInt> omega1_multiple(const CycleClass& c) {
  if (c.space().size() != 1) return std::nullopt;
  const auto& f = c.space().factor(0);
  if (c.is_zero()) return BigInt(0);
  const auto p = omega1_power(c.codim(), f.d, f.n);
  if (p.size() != c.size()) return std::nullopt;
  const auto& [m0, c0] = *c.terms().begin();
  const BigInt p0 = p.coefficient(m0);
  if (p0 == 0 || c0 % p0 != 0) return std::nullopt;
  const BigInt k = c0 / p0;
  for (const auto& [m, coeff] : p.terms())
    if (c.coefficient(m) != k * coeff) return std::nullopt;
  return k;
}

}  // namespace detail

/// Exact product in the Schubert basis for the cases this library supports:
/// hyperplane powers on projective factors, complementary codimensions on a
/// Grassmannian (duality pairing), multiplication by omega_1 or by a class
/// proportional to a power of omega_1, and anything landing past the top
/// codimension. Other products throw UnsupportedOperation.
inline CycleClass multiply(const CycleClass& a, const CycleClass& b) {
  detail::require(a.space() == b.space(), "multiply: classes live on different spaces");
  const Space& space = a.space();
  CycleClass out(space, a.codim() + b.codim());
  if (a.is_zero() || b.is_zero() || out.codim() > space.dimension()) return out;

  if (space.size() == 1 && !space.factor(0).is_projective()) {
    for (const auto* pair : {&a, &b}) {
      const CycleClass& power_like = *pair;
      const CycleClass& other = (pair == &a) ? b : a;
      if (auto k = detail::omega1_multiple(power_like); k && power_like.codim() > 1) {
        CycleClass acc = other;
        for (int i = 0; i < power_like.codim(); ++i) acc = detail::pieri_apply(acc);
        return *k * std::move(acc);
      }
    }
  }

  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<std::pair<Monomial, BigInt>> partial{{Monomial{}, ca * cb}};
      for (std::size_t i = 0; i < space.size(); ++i) {
        auto prod = detail::basis_product(space.factor(i), ma[i], mb[i]);
        if (!prod)
          throw UnsupportedOperation("multiply: product " + ma[i].to_string() + " * " +
                                     mb[i].to_string() + " on " + space.factor(i).to_string() +
                                     " needs Littlewood-Richardson coefficients");
        std::vector<std::pair<Monomial, BigInt>> next;
        for (const auto& [pm, pc] : partial)
          for (const auto& [nu, c] : *prod) {
            Monomial m = pm;
            m.push_back(nu);
            next.emplace_back(std::move(m), pc * c);
          }
        partial = std::move(next);
      }
      for (const auto& [m, c] : partial) out.add(m, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Twisted Schur classes on P^{n-1} x Gr_d(n)

/// Binomial determinant det [ C(lt_i + e - i, mt_j + e - j) ]_{1<=i,j<=e},
/// e = n - d, with lt, mt the conjugates of lambda, mu padded to e entries.
inline BigInt schur_twist_coefficient(const Partition& lambda, const Partition& mu, int d, int n) {
  const int e = n - d;
  const auto lt = conjugate(lambda).padded(static_cast<std::size_t>(e));
  const auto mt = conjugate(mu).padded(static_cast<std::size_t>(e));
  std::vector<long long> rows(static_cast<std::size_t>(e)), cols(static_cast<std::size_t>(e));
  for (int i = 1; i <= e; ++i) {
    rows[static_cast<std::size_t>(i - 1)] = lt[static_cast<std::size_t>(i - 1)] + e - i;
    cols[static_cast<std::size_t>(i - 1)] = mt[static_cast<std::size_t>(i - 1)] + e - i;
  }
  return binomial_determinant(rows, cols);
}

/// Delta_lambda(c(tau_1^{(x)r} (x) kappa_d)) on P^{n-1} x Gr_d(n):
///   sum_i (-r)^{k-i} H^{k-i} x ( sum_{mu in lambda, |mu| = i} d_{lt,mt} omega_mu ),
/// k = |lambda|, dropping H-exponents above n-1.
inline CycleClass twisted_schur(const Partition& lambda, const BigInt& r, int d, int n) {
  const auto space = Space::product(Space::projective(n), Space::grassmannian(d, n));
  detail::require_fits(lambda, space.factor(1).box());
  const int k = lambda.weight();
  CycleClass out(space, k);
  for (const auto& mu : subpartitions(lambda)) {
    const int h = k - mu.weight();
    if (h > n - 1) continue;
    BigInt c = schur_twist_coefficient(lambda, mu, d, n);
    if (c == 0) continue;
    out.add({hyperplane_power(h), mu}, ipow(BigInt(-r), static_cast<unsigned>(h)) * c);
  }
  return out;
}

/// Twisted Schur class of the full d x (n-d) box, codimension N = d(n-d).
inline CycleClass g_cycle(int d, int n, const BigInt& r) {
  return twisted_schur(Factor::grassmannian(d, n).box().full(), r, d, n);
}

/// Which of the two top Chern class cycles to build. plus_one is the
/// d*r = +1 (mod n) case and carries the (-1)^m signs.
enum class FSign { plus_one, minus_one };

/// sum_{m=0}^{n-1} s^m H^{n-1-m} x omega_1^m with s = -1 for plus_one and
/// s = +1 for minus_one. Codimension n-1.
inline CycleClass f_cycle(int d, int n, FSign sign) {
  const auto space = Space::product(Space::projective(n), Space::grassmannian(d, n));
  const int top = std::min(n - 1, space.factor(1).dimension());
  CycleClass out(space, n - 1);
  for (int m = 0; m <= top; ++m) {
    const BigInt s = (sign == FSign::plus_one && m % 2 == 1) ? -1 : 1;
    const auto power = omega1_power(m, d, n);
    for (const auto& [mono, c] : power.terms())
      out.add({hyperplane_power(n - 1 - m), mono[0]}, s * c);
  }
  return out;
}

}  // namespace sbmotive
