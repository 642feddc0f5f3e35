#pragma once

// JSON encodings. Big integers are always decimal strings. Cycle terms are
// objects keyed by factor: "h" for the exponent on a projective factor, "mu"
// for the partition on a Grassmannian factor; a second factor of the same
// kind uses "h2" / "mu2".

#include <string>
#include <vector>

#include "json.hpp"

#include "sbmotive/chow.hpp"
#include "sbmotive/errors.hpp"
#include "sbmotive/exactmath.hpp"
#include "sbmotive/motives.hpp"
#include "sbmotive/partitions.hpp"
#include "sbmotive/poincare.hpp"

namespace sbmotive {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json partition_to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
  detail::require(j.is_array(), "partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

inline Json factor_to_json(const Factor& f) {
  Json j;
  if (f.is_projective()) {
    j["kind"] = "projective";
  } else {
    j["kind"] = "grassmannian";
    j["d"] = f.d;
  }
  j["n"] = f.n;
  return j;
}

/// Single factors encode flat; products nest as {"kind":"product","left","right"}.
inline Json space_to_json(const Space& s) {
  detail::require(s.size() >= 1, "cannot encode an empty space");
  if (s.size() == 1) return factor_to_json(s.factor(0));
  Json j;
  j["kind"] = "product";
  j["left"] = factor_to_json(s.factor(0));
  j["right"] = space_to_json(s.tail(1));
  return j;
}

inline Space space_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("kind"), "space must be an object with a kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "projective") return Space::projective(j.at("n").get<int>());
  if (kind == "grassmannian") return Space::grassmannian(j.at("d").get<int>(), j.at("n").get<int>());
  if (kind == "product") return Space::product(space_from_json(j.at("left")), space_from_json(j.at("right")));
  throw ContractError("unknown space kind '" + kind + "'");
}

namespace detail {

inline std::vector<std::string> term_keys(const Space& s) {
  std::vector<std::string> keys;
  int np = 0, ng = 0;
  for (const auto& f : s.factors()) {
    int& count = f.is_projective() ? np : ng;
    ++count;
    std::string base = f.is_projective() ? "h" : "mu";
    keys.push_back(count == 1 ? base : base + std::to_string(count));
  }
  return keys;
}

inline Json terms_to_json(const CycleClass& c) {
  const auto keys = term_keys(c.space());
  Json arr = Json::array();
  for (const auto& [m, coeff] : c.terms()) {
    Json t;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (c.space().factor(i).is_projective())
        t[keys[i]] = m[i].weight();
      else
        t[keys[i]] = partition_to_json(m[i]);
    }
    t["coeff"] = coeff.str();
    arr.push_back(std::move(t));
  }
  return arr;
}

inline CycleClass terms_from_json(const Space& space, int codim, const Json& arr) {
  require(arr.is_array(), "terms must be a JSON array");
  const auto keys = term_keys(space);
  CycleClass c(space, codim);
  for (const auto& t : arr) {
    Monomial m;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      require(t.contains(keys[i]), "term is missing key '" + keys[i] + "'");
      if (space.factor(i).is_projective()) {
        const int h = t.at(keys[i]).get<int>();
        require(h >= 0, "negative hyperplane exponent");
        m.push_back(hyperplane_power(h));
      } else {
        m.push_back(partition_from_json(t.at(keys[i])));
      }
    }
    c.add(m, from_decimal(t.at("coeff").get<std::string>()));
  }
  return c;
}

}  // namespace detail

inline Json cycle_to_json(const CycleClass& c) {
  Json j;
  j["space"] = space_to_json(c.space());
  j["codim"] = c.codim();
  j["terms"] = detail::terms_to_json(c);
  return j;
}

inline CycleClass cycle_from_json(const Json& j) {
  return detail::terms_from_json(space_from_json(j.at("space")), j.at("codim").get<int>(),
                                 j.at("terms"));
}

inline Json correspondence_to_json(const Correspondence& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "correspondence";
  j["source"] = space_to_json(c.source());
  j["target"] = space_to_json(c.target());
  j["codim"] = c.codim();
  j["terms"] = detail::terms_to_json(c.cycle());
  return j;
}

inline Correspondence correspondence_from_json(const Json& j) {
  detail::require(j.is_object() && j.value("kind", "") == "correspondence",
                  "expected a JSON object of kind 'correspondence'");
  auto source = space_from_json(j.at("source"));
  auto target = space_from_json(j.at("target"));
  auto cycle = detail::terms_from_json(Space::product(source, target), j.at("codim").get<int>(),
                                       j.at("terms"));
  return {std::move(source), std::move(target), std::move(cycle)};
}

inline Json certificate_to_json(const DecompositionCertificate& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "decomposition_certificate";
  j["n"] = c.n;
  j["d"] = c.d;
  j["r"] = c.r;
  j["route"] = to_string(c.route);
  j["sign_case"] = c.sign_case ? Json(to_string(*c.sign_case)) : Json(nullptr);
  j["verdict"] = to_string(c.verdict);
  Json ob;
  ob["admissible"] = c.obstruction.admissible;
  ob["witness"] = c.obstruction.witness ? Json(*c.obstruction.witness) : Json(nullptr);
  ob["top_coefficient"] = c.obstruction.top_coefficient.str();
  ob["next_coefficient"] = c.obstruction.next_coefficient.str();
  j["obstruction"] = std::move(ob);
  Json checks;
  checks["alpha_congruent_to_f"] = c.alpha_congruent_to_f;
  checks["beta_congruent_to_gt"] = c.beta_congruent_to_gt;
  checks["composition_is_diagonal"] = c.composition_is_diagonal;
  checks["projector_idempotent"] = c.projector_idempotent;
  j["checks"] = std::move(checks);
  j["alpha"] = c.alpha ? correspondence_to_json(*c.alpha) : Json(nullptr);
  j["beta"] = c.beta ? correspondence_to_json(*c.beta) : Json(nullptr);
  j["composition"] = c.composition ? cycle_to_json(*c.composition) : Json(nullptr);
  j["projector"] = c.projector ? correspondence_to_json(*c.projector) : Json(nullptr);
  return j;
}

inline std::string certificate_to_text(const DecompositionCertificate& c) {
  std::string s;
  s += "n = " + std::to_string(c.n) + ", d = " + std::to_string(c.d) + ", r = " + std::to_string(c.r) + "\n";
  s += "route: " + std::string(to_string(c.route)) + "\n";
  s += "verdict: " + std::string(to_string(c.verdict)) + "\n";
  s += "obstruction scan: g at 1 x w_N = " + c.obstruction.top_coefficient.str() +
       ", at H x w_{N-1} = " + c.obstruction.next_coefficient.str() + ", witness " +
       (c.obstruction.witness ? std::to_string(*c.obstruction.witness) : std::string("none")) + "\n";
  if (c.sign_case) s += "sign case: d*r = " + std::string(to_string(*c.sign_case)) + " mod n\n";
  if (c.alpha) s += "alpha = " + c.alpha->cycle().to_string() + "\n";
  if (c.beta) s += "beta = " + c.beta->cycle().to_string() + "\n";
  if (c.composition) s += "beta o alpha = " + c.composition->to_string() + "\n";
  if (c.projector)
    s += "alpha o beta: " + std::to_string(c.projector->cycle().size()) + " terms, idempotent: " +
         (c.projector_idempotent ? "yes" : "no") + "\n";
  return s;
}

inline Json polynomial_to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

}  // namespace sbmotive
