#pragma once

// Compatibility of the rank-n families L-, T and K+ along the embeddings W(m) ⊂ W(n).

#include <map>
#include <string>
#include <vector>

#include "tensorfield.hpp"

namespace superw {

enum class Family { l_minus, tensor_field, kac_plus };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::l_minus: return "L-";
    case Family::tensor_field: return "T";
    case Family::kac_plus: return "K+";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "L-" || s == "L" || s == "l-") return Family::l_minus;
  if (s == "T" || s == "t") return Family::tensor_field;
  if (s == "K+" || s == "K" || s == "k+") return Family::kac_plus;
  throw std::invalid_argument("unknown object '" + s + "' (expected L-, T or K+)");
}

/// Local terms of W(m) inside W(n): all indices in 1..m.
inline std::vector<Term> local_terms_within(int m, int n) {
  std::vector<Term> out;
  for (const Term& t : local_terms(n))
    if ((t.mask >> m) == 0 && t.target <= m) out.push_back(t);
  return out;
}

struct StabilizationReport {
  Partition lambda, mu;
  int n_from = 0, n_to = 0;
  Family object = Family::l_minus;
  std::map<int, Character> characters;  ///< rank -> character of the rank-n_from part
  bool stabilized = false;
  std::string detail;  ///< first disagreement, if any
};

/// The W(n_from)-submodule of the rank-n member generated by its rank-n_from generating data:
///   L-: the highest weight vector;  K+: 1⊗v;  T: ξ_S⊗x with S ⊆ {1..n_from}, x ∈ U(gl(n_from))v.
inline ModulePtr stable_part(const Partition& lam, const Partition& mu, int n_from, int n, Family f) {
  auto terms = local_terms_within(n_from, n);
  std::shared_ptr<Span> span;
  switch (f) {
    case Family::l_minus: {
      auto l = l_minus_generator(lam, mu, n);
      span = closure(l.field, {l.generator}, kDefaultBudget, &terms);
      break;
    }
    case Family::kac_plus: {
      auto k = kac_plus(gl_simple(lam, mu, n, OrderKind::interleaved), n);
      span = closure(k, {SparseVec::unit(0)}, kDefaultBudget, &terms);
      break;
    }
    case Family::tensor_field: {
      auto x = gl_simple(lam, mu, n, OrderKind::interleaved);
      auto t = tensor_field(x, n);
      std::vector<Term> gl_terms;
      for (const Term& s : terms)
        if (s.z_degree() == 0) gl_terms.push_back(s);
      auto base = closure(x, {generator_of(*x)}, kDefaultBudget, &gl_terms);
      std::vector<SparseVec> seeds;
      for (Mask s = 0; s < (Mask{1} << n_from); ++s)
        for (std::size_t k = 0; k < base->dim(); ++k) {
          Accumulator acc;
          for (const auto& [i, c] : base->vector(k).entries()) acc.add(s * x->dim() + i, c);
          seeds.push_back(acc.take());
        }
      span = closure(t, seeds, kDefaultBudget, &terms);
      break;
    }
  }
  return subspace_module(span, Scope::w, to_string(f) + "(" + lam.to_string() + "|" + mu.to_string() + ")@" +
                                             std::to_string(n));
}

/// Builds the family member at each rank in [n_from, n_to] and compares the graded characters
/// of consecutive rank-n_from parts.
inline StabilizationReport stabilize(const Partition& lam, const Partition& mu, int n_from, int n_to, Family f) {
  int lo = f == Family::l_minus ? l_minus_min_rank(lam, mu) : min_rank(lam, mu, OrderKind::interleaved);
  if (n_from < lo) throw RankError("stabilize: n_from " + std::to_string(n_from) + " below " + std::to_string(lo));
  if (n_to <= n_from) throw std::invalid_argument("stabilize: need n_to > n_from");
  StabilizationReport r{lam, mu, n_from, n_to, f, {}, true, {}};
  for (int n = n_from; n <= n_to; ++n) {
    r.characters[n] = character(*stable_part(lam, mu, n_from, n, f));
    if (n > n_from && r.stabilized) {
      auto diff = character_difference(r.characters[n - 1], r.characters[n]);
      if (!diff.empty()) {
        r.stabilized = false;
        r.detail = "ranks " + std::to_string(n - 1) + " and " + std::to_string(n) + " differ at " + diff;
      }
    }
  }
  return r;
}

}  // namespace superw
