#pragma once

// Young tableau counts: closed forms for semistandard (alphabet {1..d}) and
// standard tableaux, brute-force enumerators used as oracles, and the
// Robinson-Schensted counting identity with its mod-n overflow analysis.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "sbmotive/errors.hpp"
#include "sbmotive/exactmath.hpp"
#include "sbmotive/partitions.hpp"

namespace sbmotive {

/// Rows of entries, row i has shape.part(i+1) cells.
using Tableau = std::vector<std::vector<int>>;

/// Upper bound on |shape| for the brute-force enumerators.
struct EnumerationBudget {
  int max_weight = 10;

  static constexpr const char* kEnvVar = "SBMOTIVE_ENUM_BUDGET";

  /// Default budget unless SBMOTIVE_ENUM_BUDGET holds a nonnegative integer.
  static EnumerationBudget from_env() {
    EnumerationBudget b;
    if (const char* v = std::getenv(kEnvVar)) {
      try {
        int parsed = std::stoi(v);
        if (parsed >= 0) b.max_weight = parsed;
      } catch (const std::exception&) {
      }
    }
    return b;
  }
};

enum class CountMethod { closed_form, enumeration };

struct TableauCountReport {
  Partition shape;
  int alphabet_size = 0;
  BigInt ssyt_count;
  BigInt syt_count;
  CountMethod method = CountMethod::closed_form;
};

/// Number of semistandard tableaux of shape xi with entries in {1..d}:
/// det [ C(l_i, j) ] with l the d-term jump sequence of xi. The Vandermonde
/// form D_l / (0! 1! ... (d-1)!) is evaluated as well and must agree.
inline BigInt count_ssyt(const Partition& xi, int d) {
  detail::require(d >= 0, "count_ssyt: negative alphabet size");
  detail::require(xi.length() <= static_cast<std::size_t>(d),
                  "count_ssyt: shape " + xi.to_string() + " has more than " +
                      std::to_string(d) + " rows");
  if (d == 0) return 1;
  const auto l = jump_sequence(xi, d);
  std::vector<long long> cols(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) cols[static_cast<std::size_t>(j)] = j;
  BigInt det = binomial_determinant(l, cols);
  BigInt num = vandermonde(l);
  BigInt den = superfactorial(d);
  detail::ensure(num % den == 0 && num / den == det,
                 "count_ssyt: determinant and Vandermonde forms disagree for " + xi.to_string());
  return det;
}

/// Number of standard tableaux: m! D_l / (l_0! ... l_{d-1}!) with d the
/// number of rows of xi.
inline BigInt count_syt(const Partition& xi) {
  if (xi.empty()) return 1;
  return degree_coefficient(xi.weight(), jump_sequence(xi, static_cast<int>(xi.length())));
}

namespace detail {

inline void check_budget(const Partition& xi, const EnumerationBudget& budget) {
  if (xi.weight() > budget.max_weight)
    throw ResourceError("enumeration of shape " + xi.to_string() + " exceeds the budget of " +
                        std::to_string(budget.max_weight) + " cells");
}

inline std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (const auto& row : t) w.insert(w.end(), row.begin(), row.end());
  return w;
}

}  // namespace detail

/// All semistandard tableaux (rows weakly, columns strictly increasing) of
/// shape xi over {1..d}, ordered lexicographically by reading word.
inline std::vector<Tableau> enumerate_ssyt(const Partition& xi, int d,
                                           const EnumerationBudget& budget = {}) {
  detail::check_budget(xi, budget);
  std::vector<Tableau> out;
  if (xi.length() > static_cast<std::size_t>(std::max(d, 0))) return out;
  const auto& shape = xi.parts();
  Tableau t(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) t[i].assign(static_cast<std::size_t>(shape[i]), 0);
  const auto conj = conjugate(xi);

  auto rec = [&](auto&& self, std::size_t row, std::size_t col) -> void {
    if (row == shape.size()) {
      out.push_back(t);
      return;
    }
    if (col == static_cast<std::size_t>(shape[row])) {
      self(self, row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
    // cells below in this column need strictly larger entries
    const int below = conj.part(col + 1) - static_cast<int>(row) - 1;
    for (int v = lo; v + below <= d; ++v) {
      t[row][col] = v;
      self(self, row, col + 1);
    }
    t[row][col] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

/// All standard tableaux of shape xi, ordered lexicographically by reading word.
inline std::vector<Tableau> enumerate_syt(const Partition& xi,
                                          const EnumerationBudget& budget = {}) {
  detail::check_budget(xi, budget);
  const auto& shape = xi.parts();
  const int m = xi.weight();
  std::vector<Tableau> out;
  Tableau t(shape.size());
  std::vector<int> filled(shape.size(), 0);

  // place 1..m one at a time into cells that keep the filled region a partition
  auto rec = [&](auto&& self, int next) -> void {
    if (next > m) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (filled[r] == shape[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      t[r].push_back(next);
      ++filled[r];
      self(self, next + 1);
      --filled[r];
      t[r].pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return detail::reading_word(a) < detail::reading_word(b);
  });
  return out;
}

/// Both counts for one shape, by closed form or by enumeration.
inline TableauCountReport count_tableaux(const Partition& xi, int d, CountMethod method,
                                         const EnumerationBudget& budget = {}) {
  TableauCountReport rep{xi, d, 0, 0, method};
  if (method == CountMethod::closed_form) {
    rep.ssyt_count = count_ssyt(xi, d);
    rep.syt_count = count_syt(xi);
  } else {
    rep.ssyt_count = enumerate_ssyt(xi, d, budget).size();
    rep.syt_count = enumerate_syt(xi, budget).size();
  }
  return rep;
}

/// Shapes of weight m with at most d rows.
inline std::vector<Partition> shapes_with_rows(int m, int d) {
  if (m < 0) return {};
  return enumerate_partitions(m, BoxContext(std::max(d, 1), std::max(m, 1)));
}

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

/// sum_{|xi| = m, <= d rows} d_xi(d) f^xi, compared with d^m.
inline IdentityCheck rs_identity(int d, int m, CountMethod method = CountMethod::closed_form,
                                 const EnumerationBudget& budget = {}) {
  detail::require(d >= 1 && m >= 0, "rs_identity: need d >= 1 and m >= 0");
  IdentityCheck out{0, ipow(BigInt(d), static_cast<unsigned>(m)), false};
  for (const auto& xi : shapes_with_rows(m, d)) {
    auto rep = count_tableaux(xi, d, method, budget);
    out.lhs += rep.ssyt_count * rep.syt_count;
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

/// For prime n, 2 <= d <= n/2 and m <= n-1: every shape of weight m with at
/// most d rows whose top jump l_{d-1} reaches n has (i) only that one jump
/// above n-1, (ii) l_{d-1} < 2n, and (iii) d_xi(d) f^xi divisible by n.
inline bool overflow_terms_divisible(int n, int d, int m) {
  detail::require(is_prime(n), "overflow_terms_divisible: n must be prime");
  detail::require(d >= 2 && d <= n / 2, "overflow_terms_divisible: need 2 <= d <= n/2");
  detail::require(m >= 0 && m <= n - 1, "overflow_terms_divisible: need 0 <= m <= n-1");
  for (const auto& xi : shapes_with_rows(m, d)) {
    const auto l = jump_sequence(xi, d);
    const long long top = l.back();
    if (top < n) continue;
    if (l.size() >= 2 && l[l.size() - 2] > n - 1) return false;
    if (top >= 2LL * n) return false;
    if ((count_ssyt(xi, d) * count_syt(xi)) % n != 0) return false;
  }
  return true;
}

/// The part of the RS sum over shapes whose jumps stay below n.
inline BigInt rs_bounded_sum(int n, int d, int m) {
  BigInt s = 0;
  for (const auto& xi : shapes_with_rows(m, d))
    if (jump_sequence(xi, d).back() <= n - 1) s += count_ssyt(xi, d) * count_syt(xi);
  return s;
}

}  // namespace sbmotive
