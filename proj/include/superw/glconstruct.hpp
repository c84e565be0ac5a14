#pragma once

// gl(n)-modules: natural and conatural modules, mixed tensor powers, the simple modules V_{λ,μ},
// Schur modules, semisimple decomposition and the socle multiplicity identity.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "module_ops.hpp"
#include "standard_modules.hpp"

namespace superw {

/// V_n: E_ij·ξ_k = δ_jk ξ_i, weight ε_k, Z-degree 1.
inline ModulePtr natural(int n) {
  if (n < 1) throw RankError("natural: rank must be positive");
  std::vector<BasisVector> basis;
  for (int k = 1; k <= n; ++k) basis.push_back({"x" + std::to_string(k), Weight::epsilon(k), 1, 1, 0});
  auto column = [](const Term& t, std::size_t k) {
    if (t.target == static_cast<int>(k) + 1) return SparseVec::unit(std::countr_zero(t.mask));
    return SparseVec{};
  };
  return make_module(n, Scope::gl, std::move(basis), column, "V");
}

/// V*_n: E_ij·∂_k = −δ_ik ∂_j, weight −ε_k, Z-degree −1.
inline ModulePtr conatural(int n) {
  if (n < 1) throw RankError("conatural: rank must be positive");
  std::vector<BasisVector> basis;
  for (int k = 1; k <= n; ++k) basis.push_back({"d" + std::to_string(k), Weight::epsilon(k, -1), -1, 1, 0});
  auto column = [](const Term& t, std::size_t k) {
    if (std::countr_zero(t.mask) == static_cast<int>(k)) return SparseVec::unit(t.target - 1, -1);
    return SparseVec{};
  };
  return make_module(n, Scope::gl, std::move(basis), column, "V*");
}

/// V^{⊗p} ⊗ V_*^{⊗q}.
inline ModulePtr mixed_tensor(int p, int q, int n) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("mixed_tensor needs p + q >= 1");
  ModulePtr out;
  auto append = [&](const ModulePtr& f) { out = out ? tensor(out, f) : f; };
  for (int i = 0; i < p; ++i) append(natural(n));
  for (int i = 0; i < q; ++i) append(conatural(n));
  return out;
}

/// E_{s_{k+1} s_k} for consecutive entries of the order; they generate the lowering subalgebra.
inline std::vector<Term> simple_lowering_terms(const BorelOrder& b) {
  std::vector<Term> out;
  auto seq = b.sequence();
  for (std::size_t p = 0; p + 1 < seq.size(); ++p) out.push_back(Term{bit(seq[p + 1]), seq[p]});
  return out;
}

/// Cyclic submodule U(g)v = U(n^-)v of a b-singular vector v.
inline ModulePtr highest_weight_submodule(const ModulePtr& m, const SparseVec& v, const BorelOrder& b,
                                          std::string name) {
  auto lowering = simple_lowering_terms(b);
  return subspace_module(closure(m, {v}, kDefaultBudget, &lowering), Scope::gl, std::move(name));
}

inline std::string pair_name(const Partition& lam, const Partition& mu) {
  return "V_{(" + lam.to_string() + "),(" + mu.to_string() + ")}";
}

/// The simple gl(n)-module of highest weight stable_highest_weight(λ, μ) with respect to the order,
/// realized inside V^{⊗|λ|} ⊗ V_*^{⊗|μ|}. The generator is the first basis vector of the singular space.
inline ModulePtr gl_simple(const Partition& lam, const Partition& mu, int n, OrderKind kind) {
  Weight hw = stable_highest_weight(lam, mu, kind, n);
  if (lam.empty() && mu.empty()) return trivial_module(n, Scope::gl);
  ModulePtr m = mixed_tensor(lam.size(), mu.size(), n);
  BorelOrder b{kind, n, Extension::zero};
  int z = lam.size() - mu.size();
  auto sing = grade_kernel(*m, GradeKey{hw, z, z & 1}, simple_raising_terms(b));
  if (sing.empty()) throw InternalError("no singular vector of weight " + hw.to_string());
  return highest_weight_submodule(m, sing.front(), b, pair_name(lam, mu));
}

/// S_λ(V_n).
inline ModulePtr schur_module(const Partition& lam, int n) {
  if (lam.length() > n) throw RankError("schur_module: more rows than the rank");
  return gl_simple(lam, Partition{}, n, OrderKind::natural);
}

/// True when the weight is dominant for the order: coefficients weakly decrease along the sequence.
inline bool is_dominant(const Weight& w, const BorelOrder& b) {
  auto seq = b.sequence();
  for (std::size_t p = 0; p + 1 < seq.size(); ++p)
    if (w[seq[p]] < w[seq[p + 1]]) return false;
  return true;
}

/// Highest weights of the simple constituents of a finite-dimensional gl(n)-module with multiplicity.
inline std::map<Weight, long long> decompose(const Module& m, const BorelOrder& b) {
  auto raising = simple_raising_terms(b);
  std::map<Weight, long long> out;
  for (const auto& [g, members] : m.grades()) {
    if (!is_dominant(g.weight, b)) continue;
    auto ker = grade_kernel(m, g, raising);
    if (!ker.empty()) out[g.weight] += static_cast<long long>(ker.size());
  }
  return out;
}

/// Reads a dominant weight (a_1 ≥ ... ≥ a_n) as the pair (λ', μ') of its positive and negated
/// negative parts; nullopt when positive and negative entries interleave.
inline std::optional<PartitionPair> weight_to_pair(const Weight& w, int n) {
  auto c = w.dense(n);
  std::vector<int> pos, neg;
  for (int i = 0; i < n; ++i) {
    if (c[i] > 0) {
      if (!neg.empty()) return std::nullopt;
      pos.push_back(c[i]);
    }
    if (c[i] < 0) neg.push_back(-c[i]);
  }
  std::reverse(neg.begin(), neg.end());
  try {
    return PartitionPair{Partition(pos), Partition(neg)};
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

struct SocleConstituent {
  Partition lam, mu;
  long long expected = 0, observed = 0;
};

struct SocleLayer {
  int k = 0;
  std::vector<SocleConstituent> constituents;
};

struct SocleReport {
  Partition lam, mu;
  int n = 0;
  std::vector<SocleLayer> layers;
  std::vector<std::string> notes;
  bool pass = false;
};

/// Decomposes S_λ(V) ⊗ S_μ(V_*) and compares the constituents with the socle-layer multiplicities.
inline SocleReport verify_socle_identity(const Partition& lam, const Partition& mu, int n) {
  if (n < lam.size() + mu.size() + 2)
    throw RankError("verify_socle_identity needs n >= |lambda| + |mu| + 2");
  SocleReport rep{lam, mu, n, {}, {}, false};
  ModulePtr left = lam.empty() ? trivial_module(n, Scope::gl) : gl_simple(lam, Partition{}, n, OrderKind::natural);
  ModulePtr right = mu.empty() ? trivial_module(n, Scope::gl) : gl_simple(Partition{}, mu, n, OrderKind::natural);
  ModulePtr prod = tensor(left, right);
  BorelOrder b{OrderKind::natural, n, Extension::zero};
  std::map<PartitionPair, long long> observed;
  bool shape_ok = true;
  for (const auto& [w, mult] : decompose(*prod, b)) {
    auto pr = weight_to_pair(w, n);
    if (!pr) {
      rep.notes.push_back("constituent weight " + w.to_string() + " is not of the form (λ', μ')");
      shape_ok = false;
      continue;
    }
    observed[*pr] += mult;
  }
  std::map<PartitionPair, long long> expected;
  int kmax = std::min(lam.size(), mu.size());
  for (int k = 0; k <= kmax; ++k)
    for (const auto& [pr, mult] : socle_layer_mults(lam, mu, k)) expected[pr] += mult;
  bool pass = shape_ok;
  for (int k = 0; k <= kmax; ++k) {
    SocleLayer layer{k, {}};
    std::map<PartitionPair, SocleConstituent> rows;
    for (const auto& [pr, mult] : expected)
      if (pr.first.size() == lam.size() - k) rows[pr] = {pr.first, pr.second, mult, 0};
    for (const auto& [pr, mult] : observed)
      if (pr.first.size() == lam.size() - k) {
        auto& row = rows[pr];
        row.lam = pr.first;
        row.mu = pr.second;
        row.observed = mult;
      }
    for (auto& [pr, row] : rows) {
      if (row.expected != row.observed) pass = false;
      layer.constituents.push_back(row);
    }
    rep.layers.push_back(std::move(layer));
  }
  for (const auto& [pr, mult] : observed) {
    int k = lam.size() - pr.first.size();
    if (k < 0 || k > kmax || pr.second.size() != mu.size() - k) {
      rep.notes.push_back("unexpected constituent (" + pr.first.to_string() + "),(" + pr.second.to_string() + ")");
      pass = false;
    }
  }
  rep.pass = pass;
  return rep;
}

}  // namespace superw
