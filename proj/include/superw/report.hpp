#pragma once

// JSON renderings of modules, characters and the command reports. Integers are numbers and
// non-integral rationals are "p/q" strings; keys keep insertion order so output is byte-stable.

#include <json.hpp>

#include "suite.hpp"

namespace superw {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

/// {"1": c1, "3": c3, ...} over the nonzero coefficients.
inline Json weight_json(const Weight& w) {
  Json j = Json::object();
  for (int i = 1; i <= w.support_bound(); ++i)
    if (w[i] != 0) j[std::to_string(i)] = w[i];
  return j;
}

inline Json grade_json(const GradeKey& g) {
  return Json{{"weight", weight_json(g.weight)}, {"zdeg", g.zdeg}, {"parity", g.parity}};
}

inline Json character_json(const Character& ch) {
  Json j = Json::array();
  for (const auto& [g, d] : ch.dims) {
    Json e = grade_json(g);
    e["dim"] = d;
    j.push_back(std::move(e));
  }
  return j;
}

/// {label: coefficient} in basis order.
inline Json vector_json(const Module& m, const SparseVec& v) {
  Json j = Json::object();
  for (const auto& [i, c] : v.entries()) j[m.basis(i).label] = rational_json(c);
  return j;
}

/// Optionally with basis labels and the generating operators as [row, column, "coefficient"] triplets.
inline Json module_json(const Module& m, bool with_basis = false, bool with_operators = false) {
  Json j{{"name", m.name()}, {"rank", m.rank()}, {"scope", m.scope() == Scope::gl ? "gl" : "W"},
         {"dim", m.dim()},   {"lossy", m.lossy()}};
  if (with_basis) {
    Json b = Json::array();
    for (const auto& v : m.basis())
      b.push_back({{"label", v.label}, {"weight", weight_json(v.weight)}, {"zdeg", v.zdeg}, {"parity", v.parity},
                   {"layer", v.layer}});
    j["basis"] = std::move(b);
  }
  if (with_operators) {
    Json ops = Json::array();
    for (const Term& t : m.generators()) {
      Json entries = Json::array();
      for (std::size_t col = 0; col < m.dim(); ++col)
        for (const auto& [row, c] : m.column(t, col).entries()) entries.push_back({row, col, c.get_str()});
      ops.push_back({{"term", term_string(t)}, {"entries", std::move(entries)}});
    }
    j["operators"] = std::move(ops);
  }
  j["character"] = character_json(character(m));
  return j;
}

inline Json simplicity_json(const Module& m, const SimplicityResult& r) {
  Json j{{"verdict", to_string(r.verdict)}, {"singular_dim", r.singular_dim}, {"reason", r.reason}};
  if (r.witness) {
    j["witness"] = vector_json(m, *r.witness);
    j["witness_grade"] = grade_json(*r.witness_grade);
    j["witness_submodule_dim"] = r.witness_dim;
  }
  if (r.burnside_full) j["burnside_full_rank"] = *r.burnside_full;
  return j;
}

inline Json iso_json(const IsoResult& r) {
  return Json{{"isomorphic", r.isomorphic}, {"hom_dim", r.hom_dim}, {"reason", r.reason}};
}

inline Json partition_json(const Partition& p) { return p.parts(); }

inline Json socle_json(const SocleReport& r) {
  Json layers = Json::array();
  for (const auto& layer : r.layers) {
    Json rows = Json::array();
    for (const auto& c : layer.constituents)
      rows.push_back({{"lambda'", partition_json(c.lam)}, {"mu'", partition_json(c.mu)}, {"expected", c.expected},
                      {"observed", c.observed}});
    layers.push_back({{"k", layer.k}, {"constituents", std::move(rows)}});
  }
  return Json{{"lambda", partition_json(r.lam)}, {"mu", partition_json(r.mu)}, {"n", r.n},
              {"layers", std::move(layers)}, {"notes", r.notes}, {"pass", r.pass}};
}

inline Json stabilization_json(const StabilizationReport& r) {
  Json per_n = Json::object();
  for (const auto& [n, ch] : r.characters)
    per_n[std::to_string(n)] = Json{{"dim", ch.total()}, {"character", character_json(ch)}};
  return Json{{"lambda", partition_json(r.lambda)}, {"mu", partition_json(r.mu)}, {"object", to_string(r.object)},
              {"n_from", r.n_from}, {"n_to", r.n_to}, {"characters", std::move(per_n)},
              {"stabilized", r.stabilized}, {"detail", r.detail}};
}

inline Json property_json(const std::vector<PropertyResult>& props) {
  Json j = Json::array();
  for (const auto& p : props)
    j.push_back({{"property", p.name}, {"pass", p.pass}, {"trials", p.trials}, {"counterexample", p.counterexample}});
  return j;
}

inline Json suite_json(const std::vector<CriterionResult>& rs) {
  Json j = Json::array();
  for (const auto& r : rs) j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return j;
}

}  // namespace superw
