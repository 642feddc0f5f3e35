#pragma once

// Correspondences between products of P^{n-1} and Gr_d(n), the mod-n
// generators of rational cycles, and the construction of integral cycles
// alpha, beta with beta o alpha = diagonal, certifying that the motive of the
// Severi-Brauer variety splits off the motive of the generalized one.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sbmotive/chow.hpp"
#include "sbmotive/errors.hpp"
#include "sbmotive/exactmath.hpp"
#include "sbmotive/partitions.hpp"

namespace sbmotive {

/// Raised when an (n, d, r) cannot be normalized or lifted because the
/// splitting criterion fails.
class CriterionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cycle on source x target, read as a morphism M(source) -> M(target).
class Correspondence {
 public:
  Correspondence(Space source, Space target, CycleClass cycle)
      : source_(std::move(source)), target_(std::move(target)), cycle_(std::move(cycle)) {
    detail::require(cycle_.space() == Space::product(source_, target_),
                    "correspondence cycle does not live on source x target");
  }

  [[nodiscard]] const Space& source() const { return source_; }
  [[nodiscard]] const Space& target() const { return target_; }
  [[nodiscard]] const CycleClass& cycle() const { return cycle_; }
  [[nodiscard]] int codim() const { return cycle_.codim(); }
  /// codim - dim(source); zero for a degree-0 morphism M(X) -> M(Y).
  [[nodiscard]] int twist() const { return codim() - source_.dimension(); }

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  Space source_;
  Space target_;
  CycleClass cycle_;
};

namespace detail {

inline Monomial slice(const Monomial& m, std::size_t from, std::size_t to) {
  return Monomial(m.begin() + static_cast<std::ptrdiff_t>(from),
                  m.begin() + static_cast<std::ptrdiff_t>(to));
}

inline Monomial concat(Monomial a, const Monomial& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Factorwise Poincare dual.
inline Monomial dual_monomial(const Space& space, const Monomial& m) {
  Monomial out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(dual_in_box(m[i], space.factor(i).box()));
  return out;
}

}  // namespace detail

/// Swap the two factors of every monomial.
inline Correspondence transpose(const Correspondence& c) {
  const std::size_t s = c.source().size();
  CycleClass out(Space::product(c.target(), c.source()), c.codim());
  for (const auto& [m, coeff] : c.cycle().terms())
    out.add(detail::concat(detail::slice(m, s, m.size()), detail::slice(m, 0, s)), coeff);
  return {c.target(), c.source(), std::move(out)};
}

/// beta o alpha for alpha: X -> Y and beta: Y -> Z, extending
/// (f_b x g_b) o (f_a x g_a) = deg(g_a . f_b) (f_a x g_b) bilinearly.
/// Only complementary Schubert classes pair to a nonzero degree, so each
/// alpha term meets exactly the beta terms whose Y-part is its dual.
inline Correspondence compose(const Correspondence& beta, const Correspondence& alpha) {
  detail::require(alpha.target() == beta.source(),
                  "compose: alpha targets " + alpha.target().to_string() + " but beta starts at " +
                      beta.source().to_string());
  const Space& y = alpha.target();
  const std::size_t sx = alpha.source().size();
  const std::size_t sy = y.size();

  std::map<Monomial, std::vector<std::pair<Monomial, BigInt>>> beta_by_y;
  for (const auto& [m, c] : beta.cycle().terms())
    beta_by_y[detail::slice(m, 0, sy)].emplace_back(detail::slice(m, sy, m.size()), c);

  CycleClass out(Space::product(alpha.source(), beta.target()),
                 alpha.codim() + beta.codim() - y.dimension());
  for (const auto& [m, ca] : alpha.cycle().terms()) {
    auto ydual = detail::dual_monomial(y, detail::slice(m, sx, m.size()));
    auto it = beta_by_y.find(ydual);
    if (it == beta_by_y.end()) continue;
    const Monomial x = detail::slice(m, 0, sx);
    for (const auto& [z, cb] : it->second) out.add(detail::concat(x, z), ca * cb);
  }
  return {alpha.source(), beta.target(), std::move(out)};
}

/// sum_i H^{n-1-i} x H^i on P^{n-1} x P^{n-1}.
inline Correspondence diagonal_projective(int n) {
  const auto p = Space::projective(n);
  CycleClass c(Space::product(p, p), n - 1);
  for (int i = 0; i <= n - 1; ++i) c.add({hyperplane_power(n - 1 - i), hyperplane_power(i)}, 1);
  return {p, p, std::move(c)};
}

// ---------------------------------------------------------------------------
// Rational generators

struct RationalGenerator {
  Partition lambda;
  BigInt scale = 1;
  CycleClass cycle;
  bool excluded = false;     ///< dropped from the generating set
  bool touches_top = false;  ///< nonzero mod n at 1 x w_N or H x w_{N-1}
};

struct ModNGeneratorSet {
  int n = 0;
  int d = 0;
  long long r = 0;
  int codim = 0;
  std::vector<RationalGenerator> generators;
};

namespace detail {

inline bool touches_top(const CycleClass& c, int d, int n) {
  const auto box = Factor::grassmannian(d, n).box();
  const Monomial top{hyperplane_power(0), box.full()};
  const Monomial next{hyperplane_power(1), dual_in_box(Partition{1}, box)};
  return mod_floor(c.coefficient(top), n) != 0 || mod_floor(c.coefficient(next), n) != 0;
}

}  // namespace detail

/// Generators modulo prime n of the rational cycles of codimension k on
/// P^{n-1} x Gr_d(n): the twisted Schur classes of all lambda with |lambda| = k.
/// Products with positive powers of H are multiples of n and do not appear.
inline ModNGeneratorSet rational_generators(int n, int d, long long r, int k) {
  detail::require(is_prime(n), "rational_generators: n must be prime (see composite_generators_d2)");
  const auto box = Factor::grassmannian(d, n).box();
  ModNGeneratorSet out{n, d, r, k, {}};
  for (const auto& lambda : enumerate_partitions(k, box)) {
    auto c = twisted_schur(lambda, r, d, n);
    const bool top = detail::touches_top(c, d, n);
    out.generators.push_back({lambda, 1, std::move(c), false, top});
  }
  return out;
}

/// Codimension-N generators for odd n and d = 2:
/// (n / gcd(n, N - |lambda|)) H^{N-|lambda|} x 1 . Delta_lambda for
/// N - (n-1) <= |lambda| <= N. The |lambda| = N - 1 layer carries the factor n
/// and is marked excluded.
inline ModNGeneratorSet composite_generators_d2(int n, long long r) {
  if (n % 2 == 0 || n < 5)
    throw UnsupportedOperation("composite_generators_d2 needs odd n >= 5");
  constexpr int d = 2;
  const auto box = Factor::grassmannian(d, n).box();
  const int big_n = box.area();
  ModNGeneratorSet out{n, d, r, big_n, {}};
  const auto space = Space::product(Space::projective(n), Space::grassmannian(d, n));
  for (int w = std::max(0, big_n - (n - 1)); w <= big_n; ++w) {
    const int shift = big_n - w;
    const BigInt scale = BigInt(n) / gcd(BigInt(n), BigInt(shift));
    for (const auto& lambda : enumerate_partitions(w, box)) {
      CycleClass c(space, big_n);
      const auto ts = twisted_schur(lambda, r, d, n);
      for (const auto& [m, coeff] : ts.terms()) {
        const int h = m[0].weight() + shift;
        if (h > n - 1) continue;
        c.add({hyperplane_power(h), m[1]}, scale * coeff);
      }
      const bool top = detail::touches_top(c, d, n);
      out.generators.push_back({lambda, scale, std::move(c), w == big_n - 1, top});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criterion and obstruction

/// d * r = +-1 (mod n).
inline bool criterion(int n, int d, long long r) {
  detail::require(n >= 2, "criterion: n must be at least 2");
  const BigInt x = mod_floor(BigInt(d) * r, n);
  return x == 1 || x == n - 1;
}

struct ObstructionScan {
  bool admissible = false;
  std::optional<int> witness;  ///< smallest c with c*g_top, c*g_next both +-1 mod n
  BigInt top_coefficient;      ///< coefficient of g at 1 x w_N
  BigInt next_coefficient;     ///< coefficient of g at H x w_{N-1}
};

/// Scans c in Z/n for a multiple c * g^t whose coefficients at w_N x 1 and
/// w_{N-1} x H are both units +-1, as any beta with beta o alpha = id needs.
inline ObstructionScan obstruction_scan(int n, int d, long long r) {
  const auto g = g_cycle(d, n, r);
  const auto box = Factor::grassmannian(d, n).box();
  ObstructionScan out;
  out.top_coefficient = g.coefficient({hyperplane_power(0), box.full()});
  out.next_coefficient = g.coefficient({hyperplane_power(1), dual_in_box(Partition{1}, box)});
  auto unit = [n](const BigInt& v) {
    const BigInt x = mod_floor(v, n);
    return x == 1 || x == n - 1;
  };
  for (int c = 0; c < n; ++c) {
    if (unit(c * out.top_coefficient) && unit(c * out.next_coefficient)) {
      out.admissible = true;
      out.witness = c;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization of f into alpha and lifting of g^t into beta

namespace detail {

/// Terms of a correspondence grouped by the codimension of their target part.
inline std::map<int, std::vector<Monomial>> layers_by_target(const Correspondence& c) {
  const std::size_t s = c.source().size();
  std::map<int, std::vector<Monomial>> out;
  for (const auto& [m, coeff] : c.cycle().terms())
    out[monomial_codim(slice(m, s, m.size()))].push_back(m);
  return out;
}

}  // namespace detail

/// Adjusts f modulo n so that in every layer of target codimension m >= 2 the
/// coefficients have gcd 1. Layers 0 and 1 are left alone. The adjustment adds
/// t*n to the first coefficient of the layer (in monomial order) for the
/// smallest t >= 0 that works; a single-term layer can only be fixed when its
/// coefficient is +-1 mod n, and then becomes exactly +-1.
inline Correspondence normalize_alpha(const Correspondence& f, long long n) {
  CycleClass out = f.cycle();
  for (const auto& [m, monos] : detail::layers_by_target(f)) {
    if (m < 2) continue;
    std::vector<BigInt> coeffs;
    BigInt g = 0;
    for (const auto& mono : monos) {
      coeffs.push_back(out.coefficient(mono));
      g = gcd(g, coeffs.back());
    }
    if (g == 1) continue;
    for (const auto& c : coeffs)
      if (gcd(c, BigInt(n)) != 1)
        throw CriterionFailure("normalize_alpha: coefficient " + c.str() + " in layer " +
                               std::to_string(m) + " is not coprime to " + std::to_string(n));
    if (coeffs.size() == 1) {
      const BigInt x = mod_floor(coeffs[0], n);
      if (x != 1 && x != n - 1)
        throw CriterionFailure("normalize_alpha: single coefficient " + coeffs[0].str() +
                               " in layer " + std::to_string(m) + " is not +-1 mod n");
      out.set(monos[0], x == 1 ? 1 : -1);
      continue;
    }
    BigInt rest = 0;
    for (std::size_t i = 1; i < coeffs.size(); ++i) rest = gcd(rest, coeffs[i]);
    // terminates: every prime of `rest` either divides n (never divides
    // c0 + t n) or leaves some residue of t free by CRT
    BigInt t = 1;
    while (gcd(coeffs[0] + t * n, rest) != 1) ++t;
    out.set(monos[0], coeffs[0] + t * n);
  }
  return {f.source(), f.target(), std::move(out)};
}

/// Changes g^t modulo n so that beta o alpha has every diagonal coefficient
/// exactly 1. For each source monomial x, with a_i the coefficients of alpha
/// at (x, y_i) and b_i those of g^t at the partners (y_i', x'), S = sum a_i b_i
/// must be 1 + k n; then b_i' = b_i - k n x_i where sum a_i x_i = 1.
inline Correspondence lift_beta(const Correspondence& gt, const Correspondence& alpha, long long n) {
  detail::require(alpha.target() == gt.source() && gt.target() == alpha.source(),
                  "lift_beta: g^t must go back from alpha's target to its source");
  const std::size_t s = alpha.source().size();
  std::map<Monomial, std::vector<std::pair<Monomial, BigInt>>> by_x;
  for (const auto& [m, a] : alpha.cycle().terms())
    by_x[detail::slice(m, 0, s)].emplace_back(detail::slice(m, s, m.size()), a);

  CycleClass out = gt.cycle();
  for (const auto& [x, ys] : by_x) {
    const Monomial xdual = detail::dual_monomial(alpha.source(), x);
    std::vector<Monomial> partners;
    std::vector<BigInt> a, b;
    BigInt sum = 0;
    for (const auto& [y, ay] : ys) {
      partners.push_back(detail::concat(detail::dual_monomial(alpha.target(), y), xdual));
      a.push_back(ay);
      b.push_back(out.coefficient(partners.back()));
      sum += a.back() * b.back();
    }
    if (mod_floor(sum - 1, n) != 0)
      throw CriterionFailure("lift_beta: layer sum " + sum.str() + " is not 1 mod " +
                             std::to_string(n));
    if (sum == 1) continue;
    const BigInt k = (sum - 1) / n;
    const auto comb = extended_gcd_list(a);
    if (comb.g != 1)
      throw CriterionFailure("lift_beta: alpha layer coefficients have gcd " + comb.g.str());
    for (std::size_t i = 0; i < partners.size(); ++i) out.set(partners[i], b[i] - k * n * comb.x[i]);
  }
  return {gt.source(), gt.target(), std::move(out)};
}

// ---------------------------------------------------------------------------
// Decomposition certificates

enum class Verdict { verified, criterion_failed };
enum class Route { prime, severi_brauer, composite_d2 };

inline const char* to_string(Verdict v) {
  return v == Verdict::verified ? "verified" : "criterion_failed";
}
inline const char* to_string(Route r) {
  switch (r) {
    case Route::prime: return "prime";
    case Route::severi_brauer: return "severi_brauer";
    case Route::composite_d2: return "composite_d2";
  }
  return "?";
}
inline const char* to_string(FSign s) { return s == FSign::plus_one ? "+1" : "-1"; }

struct DecompositionCertificate {
  int n = 0;
  int d = 0;
  long long r = 0;
  Route route = Route::prime;
  Verdict verdict = Verdict::criterion_failed;
  ObstructionScan obstruction;
  std::optional<FSign> sign_case;
  std::optional<Correspondence> alpha;
  std::optional<Correspondence> beta;
  std::optional<CycleClass> composition;   ///< beta o alpha
  std::optional<Correspondence> projector; ///< alpha o beta
  bool alpha_congruent_to_f = false;
  bool beta_congruent_to_gt = false;
  bool composition_is_diagonal = false;
  bool projector_idempotent = false;
};

inline bool sb_iso_criterion(int n, long long r);

/// Builds alpha from f and beta from g^t and checks beta o alpha = diagonal
/// and (alpha o beta)^2 = alpha o beta exactly. Prime n handles every d; d = 1
/// and d = n-1 are gated by the Severi-Brauer isomorphism criterion; odd
/// composite n is supported for d = 2 only.
inline DecompositionCertificate build_decomposition(int n, int d, long long r) {
  detail::require(n >= 2 && d >= 1 && d <= n - 1, "build_decomposition: need n >= 2, 1 <= d <= n-1");
  DecompositionCertificate cert;
  cert.n = n;
  cert.d = d;
  cert.r = r;
  if (is_prime(n))
    cert.route = (d == 1 || d == n - 1) ? Route::severi_brauer : Route::prime;
  else if (n % 2 == 1 && n >= 5 && d == 2)
    cert.route = Route::composite_d2;
  else
    throw UnsupportedOperation("build_decomposition: composite n = " + std::to_string(n) +
                               " is supported only for odd n and d = 2");

  const bool holds =
      cert.route == Route::severi_brauer ? sb_iso_criterion(n, r) : criterion(n, d, r);
  detail::ensure(holds == criterion(n, d, r), "gate disagrees with d*r = +-1 mod n");
  cert.obstruction = obstruction_scan(n, d, r);
  detail::ensure(cert.obstruction.admissible == holds, "obstruction scan disagrees with criterion");
  if (!holds) return cert;

  const FSign sign = mod_floor(BigInt(d) * r, n) == 1 ? FSign::plus_one : FSign::minus_one;
  cert.sign_case = sign;
  const auto p = Space::projective(n);
  const auto g = Space::grassmannian(d, n);
  const Correspondence f(p, g, f_cycle(d, n, sign));
  const Correspondence gt = transpose(Correspondence(p, g, g_cycle(d, n, r)));
  try {
    cert.alpha = normalize_alpha(f, n);
    cert.beta = lift_beta(gt, *cert.alpha, n);
  } catch (const CriterionFailure& e) {
    throw InternalInvariantFailure(std::string("criterion holds but construction failed: ") + e.what());
  }
  cert.alpha_congruent_to_f = cert.alpha->cycle().congruent_mod(f.cycle(), n);
  cert.beta_congruent_to_gt = cert.beta->cycle().congruent_mod(gt.cycle(), n);
  cert.composition = compose(*cert.beta, *cert.alpha).cycle();
  cert.projector = compose(*cert.alpha, *cert.beta);
  cert.composition_is_diagonal = *cert.composition == diagonal_projective(n).cycle();
  cert.projector_idempotent = compose(*cert.projector, *cert.projector) == *cert.projector;
  detail::ensure(cert.composition_is_diagonal && cert.projector_idempotent &&
                     cert.alpha_congruent_to_f && cert.beta_congruent_to_gt,
                 "decomposition certificate failed its exact checks");
  cert.verdict = Verdict::verified;
  return cert;
}

// ---------------------------------------------------------------------------
// Severi-Brauer scans (d = 1)

namespace detail {

/// Coefficients (-r)^i of Delta_{n-1} at H^i x H^{n-1-i}, read off the
/// twisted Schur class and checked against the closed form.
inline std::vector<BigInt> sb_generator_coefficients(int n, long long r) {
  const auto delta = twisted_schur(Partition{n - 1}, r, 1, n);
  std::vector<BigInt> v;
  for (int i = 0; i <= n - 1; ++i) {
    v.push_back(delta.coefficient({hyperplane_power(i), Partition{n - 1 - i}}));
    ensure(v.back() == ipow(BigInt(-r), static_cast<unsigned>(i)),
           "Delta_{n-1} coefficient differs from (-r)^i");
  }
  return v;
}

}  // namespace detail

/// M(SB(A)) ~ M(SB(B^op)) test: some sign pattern sum +-H^i x H^{n-1-i} is a
/// multiple of Delta_{n-1} mod n. Literal scan over the multiplier.
inline bool sb_iso_criterion(int n, long long r) {
  detail::require(is_prime(n), "sb_iso_criterion: n must be prime");
  const auto v = detail::sb_generator_coefficients(n, r);
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (const auto& vi : v) {
      const BigInt x = mod_floor(c * vi, n);
      if (x != 1 && x != n - 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Signed-subset candidates sum_{i in S} +-H^i x H^{n-1-i} that are congruent
/// mod n to a multiple of Delta_{n-1} (r = n-1). Entry i is the sign at H^i.
inline std::vector<std::vector<int>> sb_projector_scan(int n) {
  detail::require(is_prime(n), "sb_projector_scan: n must be prime");
  const auto v = detail::sb_generator_coefficients(n, n - 1);
  std::vector<std::vector<int>> survivors;
  std::vector<int> eps(static_cast<std::size_t>(n), -1);
  while (true) {
    for (int c = 0; c < n; ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < eps.size() && ok; ++i) ok = mod_floor(c * v[i] - eps[i], n) == 0;
      if (ok) {
        survivors.push_back(eps);
        break;
      }
    }
    std::size_t i = 0;
    while (i < eps.size() && eps[i] == 1) eps[i++] = -1;
    if (i == eps.size()) break;
    ++eps[i];
  }
  return survivors;
}

/// True iff the only surviving candidates are 0, Delta and -Delta.
inline bool sb_indecomposable(int n) {
  for (const auto& eps : sb_projector_scan(n)) {
    const int first = eps.front();
    for (int e : eps)
      if (e != first) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The congruence sum_{|mu'| = m} c_{mu'} d_{mu'} = d^m (mod n)

struct CongruenceCheck {
  BigInt lhs;         ///< exact value by the jump-set sum
  BigInt chow_route;  ///< sum of c_rho * d_rho from the Chow ring; equals lhs
  BigInt target;      ///< d^m
  bool holds = false; ///< lhs = d^m (mod n)
  bool exact = false; ///< lhs = d^m
};

namespace detail {

/// Strictly increasing a_0 < ... < a_{d-1} in [0, hi] with the given sum.
inline std::vector<std::vector<long long>> increasing_sets(int d, long long hi, long long sum) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long lo, long long remaining) -> void {
    const long long k = d - static_cast<long long>(cur.size());
    if (k == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (long long v = lo; v <= hi; ++v) {
      if (k * v + k * (k - 1) / 2 > remaining) break;
      cur.push_back(v);
      self(self, v + 1, remaining - v);
      cur.pop_back();
    }
  };
  rec(rec, 0, sum);
  return out;
}

}  // namespace detail

/// m!/(0! ... (d-1)!) * sum_a D_a^2 / (a_0! ... a_{d-1}!) over strictly
/// increasing a in [0, n-1] with sum a_i = m + d(d-1)/2, evaluated exactly and
/// compared with d^m mod n. Requires prime n (or d = 2), 2 <= d <= n/2 and
/// 0 <= m <= n-1.
inline CongruenceCheck verify_congruence(int n, int d, int m) {
  detail::require(is_prime(n) || (d == 2 && n >= 4),
                  "verify_congruence: n must be prime unless d = 2");
  detail::require(d >= 2 && d <= n / 2, "verify_congruence: need 2 <= d <= n/2");
  detail::require(m >= 0 && m <= n - 1, "verify_congruence: need 0 <= m <= n-1");
  BigRational sum = 0;
  for (const auto& a : detail::increasing_sets(d, n - 1, m + static_cast<long long>(d) * (d - 1) / 2)) {
    BigInt den = 1;
    for (long long ai : a) den *= factorial(ai);
    const BigInt va = vandermonde(a);
    sum += BigRational(va * va, den);
  }
  sum *= BigRational(factorial(m), superfactorial(d));
  detail::ensure(boost::multiprecision::denominator(sum) == 1, "verify_congruence: non-integral sum");

  CongruenceCheck out;
  out.lhs = boost::multiprecision::numerator(sum);
  const auto box = Factor::grassmannian(d, n).box();
  const auto full = box.full();
  const auto power = omega1_power(m, d, n);
  for (const auto& [mono, c] : power.terms())
    out.chow_route += c * schur_twist_coefficient(full, dual_in_box(mono[0], box), d, n);
  detail::ensure(out.chow_route == out.lhs, "verify_congruence: the two routes disagree");
  out.target = ipow(BigInt(d), static_cast<unsigned>(m));
  out.holds = mod_floor(out.lhs - out.target, n) == 0;
  out.exact = out.lhs == out.target;
  return out;
}

/// m!/2 * sum_{x1 + x2 = m + 1} (x1 - x2)^2 / (x1! x2!), evaluated exactly.
/// The value is 2^m.
inline BigInt cong2_exact(int m) {
  detail::require(m >= 0, "cong2_exact: m must be nonnegative");
  BigRational sum = 0;
  for (long long x1 = 0; x1 <= m + 1; ++x1) {
    const long long x2 = m + 1 - x1;
    sum += BigRational(BigInt((x1 - x2) * (x1 - x2)), factorial(x1) * factorial(x2));
  }
  sum *= BigRational(factorial(m), 2);
  detail::ensure(boost::multiprecision::denominator(sum) == 1, "cong2_exact: non-integral sum");
  return boost::multiprecision::numerator(sum);
}

}  // namespace sbmotive
