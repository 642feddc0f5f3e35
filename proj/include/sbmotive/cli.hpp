#pragma once

// Command implementations behind the `sbmotive` executable. Each command
// writes to the given streams and returns the process exit status:
// 0 success / verified, 1 a check or criterion failed, 2 invalid or
// unsupported input.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sbmotive/chow.hpp"
#include "sbmotive/exactmath.hpp"
#include "sbmotive/motives.hpp"
#include "sbmotive/partitions.hpp"
#include "sbmotive/poincare.hpp"
#include "sbmotive/serialize.hpp"
#include "sbmotive/tableaux.hpp"

namespace sbmotive::cli {

enum ExitStatus : int { kOk = 0, kFailed = 1, kInvalid = 2 };

enum class Format { text, json };

struct CheckRecord {
  std::string name;
  Json parameters;
  std::string expected;
  std::string actual;
  bool pass = false;
};

class Report {
 public:
  Report(std::string command, Json parameters)
      : command_(std::move(command)), parameters_(std::move(parameters)) {}

  void add(std::string name, Json params, std::string expected, std::string actual, bool pass) {
    checks_.push_back({std::move(name), std::move(params), std::move(expected), std::move(actual), pass});
  }
  void add_bool(std::string name, Json params, bool pass) {
    add(std::move(name), std::move(params), "true", pass ? "true" : "false", pass);
  }
  void add_equal(std::string name, Json params, const BigInt& expected, const BigInt& actual) {
    add(std::move(name), std::move(params), expected.str(), actual.str(), expected == actual);
  }

  void set_wall_time(double ms) { wall_ms_ = ms; }

  [[nodiscard]] const std::vector<CheckRecord>& checks() const { return checks_; }
  [[nodiscard]] std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& c : checks_) k += c.pass;
    return k;
  }
  [[nodiscard]] bool all_passed() const { return passed() == checks_.size(); }

  [[nodiscard]] Json to_json() const {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command_;
    j["parameters"] = parameters_;
    Json arr = Json::array();
    for (const auto& c : checks_) {
      Json r;
      r["name"] = c.name;
      r["parameters"] = c.parameters;
      r["expected"] = c.expected;
      r["actual"] = c.actual;
      r["pass"] = c.pass;
      arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"total", checks_.size()}, {"passed", passed()}, {"failed", checks_.size() - passed()}};
    if (wall_ms_) j["wall_time_ms"] = *wall_ms_;
    return j;
  }

  [[nodiscard]] std::string to_text() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name << ' ' << c.parameters.dump();
      if (!c.pass || c.expected != "true") os << " expected=" << c.expected << " actual=" << c.actual;
      os << '\n';
    }
    os << passed() << '/' << checks_.size() << " checks passed\n";
    if (wall_ms_) os << "wall time: " << *wall_ms_ << " ms\n";
    return os.str();
  }

 private:
  std::string command_;
  Json parameters_;
  std::vector<CheckRecord> checks_;
  std::optional<double> wall_ms_;
};

namespace detail {

inline int write_output(const std::string& path, const std::string& body, std::ostream& out,
                        std::ostream& err) {
  if (path.empty() || path == "-") {
    out << body;
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot open " << path << " for writing\n";
    return kInvalid;
  }
  f << body;
  return kOk;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// decompose

inline int cmd_decompose(int n, int d, long long r, const std::string& output, Format format,
                         std::ostream& out, std::ostream& err) {
  DecompositionCertificate cert;
  try {
    cert = build_decomposition(n, d, r);
  } catch (const ContractError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const UnsupportedOperation& e) {
    err << "unsupported: " << e.what() << '\n';
    return kInvalid;
  }
  const std::string body =
      format == Format::json ? certificate_to_json(cert).dump(2) + "\n" : certificate_to_text(cert);
  if (int st = detail::write_output(output, body, out, err); st != kOk) return st;
  return cert.verdict == Verdict::verified ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> max_d;
  std::optional<int> max_m;
  std::optional<int> max_n;
  std::optional<std::vector<int>> primes;
  EnumerationBudget budget = EnumerationBudget::from_env();
  bool timing = false;
  Format format = Format::text;
  std::string output;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"rs", "cong", "cong2", "pieri", "poincare", "sb", "all"};
  return s;
}

namespace detail {

inline Json params(std::initializer_list<std::pair<const char*, long long>> kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

inline void suite_rs(Report& rep, int max_d, int max_m, const EnumerationBudget& budget) {
  for (int d = 1; d <= max_d; ++d) {
    for (int m = 0; m <= max_m; ++m) {
      auto closed = rs_identity(d, m);
      rep.add_equal("rs.closed_form", params({{"d", d}, {"m", m}}), closed.rhs, closed.lhs);
      if (m <= budget.max_weight) {
        auto en = rs_identity(d, m, CountMethod::enumeration, budget);
        rep.add_equal("rs.enumeration", params({{"d", d}, {"m", m}}), closed.rhs, en.lhs);
      }
    }
  }
}

inline void suite_cong(Report& rep, const std::vector<int>& primes) {
  for (int n : primes) {
    for (int d = 2; d <= n / 2; ++d) {
      for (int m = 0; m <= n - 1; ++m) {
        auto p = params({{"n", n}, {"d", d}, {"m", m}});
        auto c = verify_congruence(n, d, m);
        rep.add("cong.mod_n", p, mod_floor(c.target, n).str(), mod_floor(c.lhs, n).str(), c.holds);
        if (d == 2) {
          const BigInt expect = m < n - 1 ? c.target : c.target - n;
          rep.add_equal("cong.d2_exact", p, expect, c.lhs);
        }
        rep.add_bool("cong.overflow_divisible", p, overflow_terms_divisible(n, d, m));
        const BigInt excess = rs_identity(d, m).lhs - rs_bounded_sum(n, d, m);
        rep.add("cong.rs_reduction", p, "0", mod_floor(excess, n).str(), excess % n == 0);
      }
    }
  }
}

inline void suite_cong2(Report& rep, int max_m) {
  for (int m = 0; m <= max_m; ++m)
    rep.add_equal("cong2", params({{"m", m}}), ipow(BigInt(2), static_cast<unsigned>(m)), cong2_exact(m));
}

inline void suite_pieri(Report& rep, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      const BoxContext box(d, n - d);
      for (int m = 0; m <= n - 1; ++m) {
        const auto power = omega1_power(m, d, n);
        bool agree = true;
        bool coprime = true;
        BigInt layer_gcd = 0;
        for (const auto& rho : enumerate_partitions(m, box)) {
          const BigInt c = power.coefficient({rho});
          agree = agree && c == degree_coefficient(m, jumps(rho, box)) && c == count_syt(rho);
          coprime = coprime && gcd(c, BigInt(n)) == 1;
          layer_gcd = gcd(layer_gcd, c);
        }
        auto p = params({{"n", n}, {"d", d}, {"m", m}});
        rep.add_bool("pieri.coefficients", p, agree);
        if (is_prime(n)) rep.add_bool("pieri.coprime", p, coprime);
        if (d == 2 && n % 2 == 1) rep.add_equal("pieri.d2_gcd", p, 1, layer_gcd);
      }
      const auto g = g_cycle(d, n, 1);
      bool closed = true;
      for (const auto& [mono, c] : g.terms()) {
        const int h = mono[0].weight();
        const auto a = jumps(dual_in_box(mono[1], box), box);
        const BigInt expected = ipow(BigInt(-1), static_cast<unsigned>(h)) * vandermonde(a) / superfactorial(d);
        closed = closed && c == expected;
      }
      rep.add_bool("pieri.full_box_vandermonde", params({{"n", n}, {"d", d}}), closed);
    }
  }
}

inline void suite_poincare(Report& rep, int max_n) {
  rep.add("poincare.gr24", Json::object(), "[1, 1, 2, 1, 1]", gaussian_binomial(4, 2).to_array_string(),
          gaussian_binomial(4, 2) == IntPolynomial{1, 1, 2, 1, 1});
  for (int n = 2; n <= max_n; ++n) {
    const auto pp = projective_poincare(n);
    for (int d = 1; d < n; ++d) {
      const bool divisible = divides(pp, gaussian_binomial(n, d)).has_value();
      const bool coprime = std::gcd(n, d) == 1;
      rep.add("poincare.divides_iff_coprime", params({{"n", n}, {"d", d}}), coprime ? "true" : "false",
              divisible ? "true" : "false", divisible == coprime);
    }
  }
}

inline void suite_sb(Report& rep, const std::vector<int>& primes) {
  for (int n : primes) {
    rep.add_bool("sb.indecomposable", params({{"n", n}}), sb_indecomposable(n));
    for (int r = 0; r < n; ++r) {
      const bool expect = r == 1 || r == n - 1;
      const bool got = sb_iso_criterion(n, r);
      rep.add("sb.iso_criterion", params({{"n", n}, {"r", r}}), expect ? "true" : "false",
              got ? "true" : "false", expect == got);
    }
  }
}

inline Json primes_json(const std::vector<int>& v) { return Json(v); }

}  // namespace detail

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const auto& suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), opt.suite) == suites.end()) {
    err << "unknown suite '" << opt.suite << "'\n";
    return kInvalid;
  }
  const bool all = opt.suite == "all";
  const int max_d = opt.max_d.value_or(4);
  const int rs_max_m = opt.max_m.value_or(12);
  const int cong2_max_m = opt.max_m.value_or(30);
  const int pieri_max_n = opt.max_n.value_or(9);
  const int poincare_max_n = opt.max_n.value_or(20);
  const auto cong_primes = opt.primes.value_or(std::vector<int>{5, 7, 11, 13});
  const auto sb_primes = opt.primes.value_or(std::vector<int>{3, 5, 7, 11});

  auto bad = [&](const std::string& what) {
    err << "invalid bounds: " << what << '\n';
    return kInvalid;
  };
  if (max_d < 1) return bad("--max-d must be at least 1");
  if (opt.max_m && *opt.max_m < 0) return bad("--max-m must be nonnegative");
  if (opt.max_n && *opt.max_n < 2) return bad("--max-n must be at least 2");
  if (opt.primes)
    for (int p : *opt.primes)
      if (!is_prime(p)) return bad(std::to_string(p) + " is not prime");
  if ((all || opt.suite == "rs") && rs_max_m > 64) return bad("--max-m above 64 for rs");

  Json p;
  p["suite"] = opt.suite;
  if (all || opt.suite == "rs") {
    p["rs_max_d"] = max_d;
    p["rs_max_m"] = rs_max_m;
    p["enumeration_budget"] = opt.budget.max_weight;
  }
  if (all || opt.suite == "cong") p["cong_primes"] = detail::primes_json(cong_primes);
  if (all || opt.suite == "cong2") p["cong2_max_m"] = cong2_max_m;
  if (all || opt.suite == "pieri") p["pieri_max_n"] = pieri_max_n;
  if (all || opt.suite == "poincare") p["poincare_max_n"] = poincare_max_n;
  if (all || opt.suite == "sb") p["sb_primes"] = detail::primes_json(sb_primes);

  Report rep("verify", p);
  const auto start = std::chrono::steady_clock::now();
  try {
    if (all || opt.suite == "rs") detail::suite_rs(rep, max_d, rs_max_m, opt.budget);
    if (all || opt.suite == "cong") detail::suite_cong(rep, cong_primes);
    if (all || opt.suite == "cong2") detail::suite_cong2(rep, cong2_max_m);
    if (all || opt.suite == "pieri") detail::suite_pieri(rep, pieri_max_n);
    if (all || opt.suite == "poincare") detail::suite_poincare(rep, poincare_max_n);
    if (all || opt.suite == "sb") detail::suite_sb(rep, sb_primes);
  } catch (const ContractError& e) {
    err << "invalid bounds: " << e.what() << '\n';
    return kInvalid;
  }
  if (opt.timing)
    rep.set_wall_time(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());

  const std::string body = opt.format == Format::json ? rep.to_json().dump(2) + "\n" : rep.to_text();
  if (int st = detail::write_output(opt.output, body, out, err); st != kOk) return st;
  return rep.all_passed() ? kOk : kFailed;
}

// ---------------------------------------------------------------------------
// compose

/// Loads "FILE" holding a correspondence, or "FILE#KEY" picking alpha, beta
/// or projector out of a certificate.
inline Correspondence load_correspondence(const std::string& ref) {
  const auto hash = ref.find('#');
  const std::string path = ref.substr(0, hash);
  std::ifstream f(path);
  if (!f) throw ContractError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::exception& e) {
    throw ContractError(path + ": " + e.what());
  }
  if (hash != std::string::npos) {
    const std::string key = ref.substr(hash + 1);
    if (!j.contains(key) || j.at(key).is_null())
      throw ContractError(path + " has no correspondence under '" + key + "'");
    j = j.at(key);
  }
  try {
    return correspondence_from_json(j);
  } catch (const Json::exception& e) {
    throw ContractError(path + ": malformed correspondence: " + e.what());
  }
}

/// Prints left o right.
inline int cmd_compose(const std::string& left, const std::string& right, Format format,
                       std::ostream& out, std::ostream& err) {
  try {
    const auto l = load_correspondence(left);
    const auto r = load_correspondence(right);
    const auto c = compose(l, r);
    if (format == Format::json) {
      out << correspondence_to_json(c).dump(2) << '\n';
    } else {
      out << c.source().to_string() << " -> " << c.target().to_string() << ", codim " << c.codim()
          << '\n'
          << c.cycle().to_string() << '\n';
      if (c.source().size() == 1 && c.source() == c.target() && c.source().factor(0).is_projective())
        out << "diagonal: "
            << (c.cycle() == diagonal_projective(c.source().factor(0).n).cycle() ? "yes" : "no") << '\n';
    }
    return kOk;
  } catch (const ContractError& e) {
    err << e.what() << '\n';
    return kInvalid;
  }
}

// ---------------------------------------------------------------------------
// poincare

inline int cmd_poincare(int n, std::optional<int> d, Format format, std::ostream& out, std::ostream& err) {
  if (n < 2 || (d && (*d < 0 || *d > n))) {
    err << "invalid input: need n >= 2 and 0 <= d <= n\n";
    return kInvalid;
  }
  const auto pp = projective_poincare(n);
  Json rows = Json::array();
  std::ostringstream text;
  const int lo = d.value_or(1), hi = d.value_or(n - 1);
  for (int k = lo; k <= hi; ++k) {
    const auto gb = gaussian_binomial(n, k);
    const auto q = divides(pp, gb);
    Json row;
    row["n"] = n;
    row["d"] = k;
    row["poincare"] = polynomial_to_json(gb);
    row["divisible"] = q.has_value();
    row["multiplicities"] = q ? polynomial_to_json(*q) : Json(nullptr);
    rows.push_back(std::move(row));
    text << "Gr(" << k << "," << n << "): " << gb.to_array_string() << "  quotient by P^" << n - 1
         << ": " << (q ? q->to_array_string() : std::string("not divisible")) << '\n';
  }
  if (format == Format::json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "poincare";
    j["projective"] = polynomial_to_json(pp);
    j["grassmannians"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << "P^" << n - 1 << ": " << pp.to_array_string() << '\n' << text.str();
  }
  return kOk;
}

}  // namespace sbmotive::cli
