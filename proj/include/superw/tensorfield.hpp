#pragma once

// Tensor-field modules T(X) = Λ(n) ⊗ X, their coinduced description, and the simple modules
// L-_{λ,μ} realized inside them.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "induction.hpp"

namespace superw {

/// T(X): basis f ⊗ x at index mask(f)·dim(X) + x, with
///   (ξ^a∂_j)·(f ⊗ x) = (ξ^a∂_j f) ⊗ x + (−1)^{p(ξ^a∂_j)} Σ_{i∈a} ∂_i(ξ^a) f ⊗ E_ij x.
inline ModulePtr tensor_field(const ModulePtr& x, int n) {
  if (x->rank() != n) throw std::invalid_argument("tensor_field: rank mismatch");
  if (n > 12) throw RankError("tensor_field: rank too large");
  std::vector<BasisVector> basis;
  basis.reserve(x->dim() << n);
  for (Mask f = 0; f < (Mask{1} << n); ++f)
    for (const auto& b : x->basis())
      basis.push_back({monomial_string(f) + "⊗" + b.label, b.weight + mask_weight(f), b.zdeg + degree(f),
                       (b.parity + degree(f)) & 1, degree(f)});
  std::size_t dx = x->dim();
  auto column = [x, dx, n](const Term& t, std::size_t idx) {
    Mask f = static_cast<Mask>(idx / dx);
    std::size_t xi = idx % dx;
    Accumulator acc;
    // derivation part
    if (int s = partial_sign(t.target, f)) {
      Mask rest = f & ~bit(t.target);
      if (int s2 = merge_sign(t.mask, rest)) acc.add((t.mask | rest) * dx + xi, s * s2);
    }
    // coefficient part
    int sw = sign_of_power(t.parity());
    for (Mask a = t.mask; a; a &= a - 1) {
      int i = std::countr_zero(a) + 1;
      Mask da = t.mask & ~bit(i);
      int s = partial_sign(i, t.mask) * merge_sign(da, f);
      if (!s) continue;
      for (const auto& [y, c] : x->column(Term{bit(i), t.target}, xi).entries())
        acc.add((da | f) * dx + y, sw * s * c);
    }
    return acc.take();
  };
  return make_module(n, Scope::w, std::move(basis), column, "T(" + x->name() + ")");
}

struct DualityCheck {
  bool pass = false;
  IsoResult iso;
};

/// T(X) ≅ K+(X*)* with an explicit intertwiner.
inline DualityCheck coinduction_duality_check(const ModulePtr& x, int n) {
  DualityCheck out;
  out.iso = iso_check(tensor_field(x, n), dual(kac_plus(dual(x), n)));
  out.pass = out.iso.isomorphic && out.iso.intertwiner.has_value();
  return out;
}

struct LMinus {
  ModulePtr module;     ///< the cyclic W(n)-submodule generated by the highest weight vector
  ModulePtr field;      ///< the ambient T(V_{λ,μ})
  ModulePtr base;       ///< V_{λ,μ} for the interleaved order
  SparseVec generator;  ///< highest weight vector inside field
  Weight highest_weight;
};

/// Rank required by extract_L_minus: the interleaved highest weight must fit in 1..n.
inline int l_minus_min_rank(const Partition& lam, const Partition& mu) {
  return std::max(2, min_rank(lam, mu, OrderKind::interleaved));
}

/// T(V_{λ,μ}) for the interleaved order together with its b(≺)^min-singular vector of weight
/// Σλ_iε_{2i−1} − Σμ_jε_{2j}; `module` is left empty.
inline LMinus l_minus_generator(const Partition& lam, const Partition& mu, int n) {
  if (n < l_minus_min_rank(lam, mu))
    throw RankError("extract_L_minus: rank " + std::to_string(n) + " below " +
                    std::to_string(l_minus_min_rank(lam, mu)));
  LMinus out;
  out.highest_weight = stable_highest_weight(lam, mu, OrderKind::interleaved, n);
  out.base = gl_simple(lam, mu, n, OrderKind::interleaved);
  out.field = tensor_field(out.base, n);
  int z = lam.size() - mu.size();
  GradeKey g{out.highest_weight, z, z & 1};
  auto sing = grade_kernel(*out.field, g, raising_terms({OrderKind::interleaved, n, Extension::min}));
  if (sing.empty()) throw InternalError("no b^min singular vector of weight " + out.highest_weight.to_string());
  out.generator = sing.front();
  return out;
}

/// The W(n)-submodule of T(V_{λ,μ}) generated by its highest weight vector.
inline LMinus extract_L_minus(const Partition& lam, const Partition& mu, int n) {
  LMinus out = l_minus_generator(lam, mu, n);
  out.module = subspace_module(closure(out.field, {out.generator}), Scope::w, "L-(" + lam.to_string() + "|" + mu.to_string() + ")");
  return out;
}

/// is_simple(T(V_{λ,μ})) for the interleaved realization.
inline SimplicityResult tensor_field_simplicity(const Partition& lam, const Partition& mu, int n) {
  if (n < l_minus_min_rank(lam, mu)) throw RankError("tensor_field_simplicity: rank too small");
  return is_simple(tensor_field(gl_simple(lam, mu, n, OrderKind::interleaved), n));
}

/// Λ(n)/C, the quotient of the natural module by the constants.
inline ModulePtr exterior_positive(int n) {
  auto ext = exterior_module(n);
  return quotient_module(closure(ext, {SparseVec::unit(0)}), "exterior/C");
}

}  // namespace superw
