#pragma once

// The trivial module, the natural module Λ(n) and the adjoint module of W(n).

#include <string>
#include <vector>

#include "module.hpp"

namespace superw {

inline ModulePtr trivial_module(int n, Scope scope = Scope::w) {
  std::vector<BasisVector> basis{{"1", Weight{}, 0, 0, 0}};
  return make_module(n, scope, std::move(basis), [](const Term&, std::size_t) { return SparseVec{}; }, "trivial");
}

/// Λ(n) with W(n) acting by derivations; basis index = monomial mask.
inline ModulePtr exterior_module(int n) {
  if (n < 1 || n > 20) throw RankError("exterior_module: rank out of range");
  std::vector<BasisVector> basis;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    basis.push_back({monomial_string(m), mask_weight(m), degree(m), parity(m), degree(m)});
  auto column = [n](const Term& t, std::size_t i) {
    GrassmannElement f = WElement(n, t).apply(GrassmannElement::monomial(static_cast<Mask>(i)));
    Accumulator acc;
    for (const auto& [m, c] : f.terms()) acc.add(m, c);
    return acc.take();
  };
  return make_module(n, Scope::w, std::move(basis), column, "exterior");
}

/// W(n) acting on itself by the bracket; basis index = term_index.
inline ModulePtr adjoint_module(int n) {
  if (n < 1 || n > 12) throw RankError("adjoint_module: rank out of range");
  std::vector<BasisVector> basis(static_cast<std::size_t>(n) << n);
  for (const Term& t : all_terms(n))
    basis[term_index(t, n)] = {term_string(t), weight_of(t), t.z_degree(), t.parity(), t.z_degree()};
  auto column = [n](const Term& t, std::size_t i) {
    WElement b = bracket(t, term_at(i, n), n);
    Accumulator acc;
    for (const auto& [s, c] : b.terms()) acc.add(term_index(s, n), c);
    return acc.take();
  };
  return make_module(n, Scope::w, std::move(basis), column, "adjoint");
}

}  // namespace superw
