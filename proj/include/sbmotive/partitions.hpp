#pragma once

// Integer partitions, box duality and jump sequences.
//
// Conventions: parts are 1-based in the mathematical notation (lambda_1 is the
// largest part) and stored 0-based in `parts()`; jump sequences are 0-based,
// a_i = lambda_{d-i} + i for i = 0..d-1, padding lambda with zeros to d parts.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "sbmotive/errors.hpp"

namespace sbmotive {

class Partition {
 public:
  Partition() = default;

  /// Accepts trailing zeros; anything not weakly decreasing and nonnegative
  /// is rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { canonicalize(); }
  Partition(std::initializer_list<int> parts) : parts_(parts) { canonicalize(); }

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// lambda_i with 1-based i; zero beyond the length.
  [[nodiscard]] int part(std::size_t i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  /// Parts padded with zeros (or checked to fit) to exactly `len` entries.
  [[nodiscard]] std::vector<int> padded(std::size_t len) const {
    detail::require(parts_.size() <= len, "partition " + to_string() + " has more than " +
                                              std::to_string(len) + " parts");
    std::vector<int> out(parts_);
    out.resize(len, 0);
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
  }

 private:
  void canonicalize() {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      detail::require(parts_[i] >= 0, "partition parts must be nonnegative");
      detail::require(i == 0 || parts_[i] <= parts_[i - 1],
                      "partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  std::vector<int> parts_;
};

/// The d x w rectangle; Schubert classes of Gr_d(n) live in the d x (n-d) box.
struct BoxContext {
  int rows = 1;
  int width = 1;

  BoxContext(int rows_, int width_) : rows(rows_), width(width_) {
    detail::require(rows >= 1 && width >= 1, "box dimensions must be positive");
  }

  [[nodiscard]] int area() const { return rows * width; }

  [[nodiscard]] bool fits(const Partition& p) const {
    return p.length() <= static_cast<std::size_t>(rows) && p.part(1) <= width;
  }

  [[nodiscard]] Partition full() const {
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
  }

  [[nodiscard]] BoxContext transposed() const { return {width, rows}; }

  friend bool operator==(const BoxContext&, const BoxContext&) = default;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

namespace detail {
inline void require_fits(const Partition& p, const BoxContext& box) {
  require(box.fits(p), "partition " + p.to_string() + " does not fit in the " +
                           std::to_string(box.rows) + "x" + std::to_string(box.width) + " box");
}
}  // namespace detail

/// Complement of mu inside the box, rotated: (w - mu_d, ..., w - mu_1).
inline Partition dual_in_box(const Partition& mu, const BoxContext& box) {
  detail::require_fits(mu, box);
  auto p = mu.padded(static_cast<std::size_t>(box.rows));
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = box.width - p[p.size() - 1 - i];
  return Partition(std::move(out));
}

/// Jump sequence for at most `rows` parts, no width bound:
/// a_i = lambda_{rows-i} + i.
inline std::vector<long long> jump_sequence(const Partition& lambda, int rows) {
  auto p = lambda.padded(static_cast<std::size_t>(rows));
  std::vector<long long> a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    a[i] = p[p.size() - 1 - i] + static_cast<long long>(i);
  return a;
}

/// Jump sequence of a partition in the box; entries lie in [0, rows-1+width].
inline std::vector<long long> jumps(const Partition& lambda, const BoxContext& box) {
  detail::require_fits(lambda, box);
  return jump_sequence(lambda, box.rows);
}

/// Inverse of jump_sequence.
inline Partition from_jumps(const std::vector<long long>& a) {
  const std::size_t d = a.size();
  std::vector<int> parts(d);
  for (std::size_t i = 0; i < d; ++i) {
    detail::require(a[i] >= static_cast<long long>(i) && (i == 0 || a[i] > a[i - 1]),
                    "jump sequence must be strictly increasing and nonnegative");
    parts[d - 1 - i] = static_cast<int>(a[i] - static_cast<long long>(i));
  }
  return Partition(std::move(parts));
}

/// All partitions of `weight` fitting the box, in decreasing lexicographic
/// order: (2) before (1,1).
inline std::vector<Partition> enumerate_partitions(int weight, const BoxContext& box) {
  std::vector<Partition> out;
  if (weight < 0 || weight > box.area()) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == box.rows) return;
    const int rows_left = box.rows - static_cast<int>(cur.size());
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      if (p * rows_left < remaining) break;
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, weight, box.width);
  return out;
}

/// Every partition in the box, grouped by increasing weight.
inline std::vector<Partition> enumerate_box(const BoxContext& box) {
  std::vector<Partition> out;
  for (int w = 0; w <= box.area(); ++w) {
    auto layer = enumerate_partitions(w, box);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// mu is contained in lambda: mu_i <= lambda_i for all i.
inline bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

/// All mu contained in lambda, grouped by increasing weight.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<std::vector<Partition>> by_weight(static_cast<std::size_t>(lambda.weight()) + 1);
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
    if (i == lambda.length()) {
      Partition p(cur);
      by_weight[static_cast<std::size_t>(p.weight())].push_back(std::move(p));
      return;
    }
    for (int v = std::min(cap, lambda.parts()[i]); v >= 0; --v) {
      cur.push_back(v);
      self(self, i + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, lambda.part(1));
  std::vector<Partition> out;
  for (auto& layer : by_weight) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

}  // namespace sbmotive
