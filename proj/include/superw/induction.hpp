#pragma once

// Induced modules K+(X) = Λ(g^{-1}) ⊗ X and the degree-truncated K-(X) = S(g^>) ⊗ X, typicality of
// highest weights and primitive-vector searches.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glconstruct.hpp"

namespace superw {

namespace detail {

/// One summand of a straightened product: (PBW or ∂-monomial) ⊗ op(x), op a g^0 term or the identity.
struct Piece {
  std::size_t mono = 0;
  long op = -1;  ///< term_index of a g^0 term, or -1 for the identity
  Rational coeff;
};

/// Adds c·(mono, op) into a piece list, merging equal keys.
inline void add_piece(std::map<std::pair<std::size_t, long>, Rational>& acc, std::size_t mono, long op,
                      const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace({mono, op}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

inline std::vector<Piece> to_pieces(const std::map<std::pair<std::size_t, long>, Rational>& acc) {
  std::vector<Piece> out;
  out.reserve(acc.size());
  for (const auto& [key, c] : acc) out.push_back({key.first, key.second, c});
  return out;
}

/// Applies the pieces to x ∈ X and writes mono·dim(X) + y coordinates.
inline SparseVec expand_pieces(const std::vector<Piece>& pieces, const Module& x_mod, std::size_t x, int n) {
  Accumulator acc;
  std::size_t dx = x_mod.dim();
  for (const auto& p : pieces) {
    if (p.op < 0) {
      acc.add(p.mono * dx + x, p.coeff);
    } else {
      for (const auto& [y, c] : x_mod.column(term_at(static_cast<std::size_t>(p.op), n), x).entries())
        acc.add(p.mono * dx + y, p.coeff * c);
    }
  }
  return acc.take();
}

/// w·(∂_S ⊗ ·) in K+, memoized on (w, S).
class PlusStraightener {
 public:
  explicit PlusStraightener(int n) : n_(n) {}

  std::vector<Piece> act(const Term& w, Mask s) {
    std::uint64_t key = (static_cast<std::uint64_t>(term_index(w, n_)) << 32) | s;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    std::map<std::pair<std::size_t, long>, Rational> acc;
    if (s == 0) {
      if (w.z_degree() == -1) add_piece(acc, bit(w.target), -1, 1);
      else if (w.z_degree() == 0) add_piece(acc, 0, static_cast<long>(term_index(w, n_)), 1);
    } else {
      int i1 = std::countr_zero(s) + 1;
      Mask rest = s & ~bit(i1);
      // w ∂_{i1} u = [w, ∂_{i1}] u + (−1)^{p(w)} ∂_{i1} (w u)
      WElement br = bracket(w, Term{0, i1}, n_);
      for (const auto& [t, c] : br.terms())
        for (const auto& p : act(t, rest)) add_piece(acc, p.mono, p.op, c * p.coeff);
      int sw = sign_of_power(w.parity());
      for (const auto& p : act(w, rest)) {
        Mask m = static_cast<Mask>(p.mono);
        if (has(m, i1)) continue;
        int s2 = sign_of_power(std::popcount(m & (bit(i1) - 1)));
        add_piece(acc, m | bit(i1), p.op, sw * s2 * p.coeff);
      }
    }
    auto pieces = to_pieces(acc);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.try_emplace(key, std::move(pieces)).first->second;
  }

 private:
  int n_;
  std::mutex mu_;
  std::unordered_map<std::uint64_t, std::vector<Piece>> memo_;
};

}  // namespace detail

/// "d1^d3" for ∂_1∂_3, "1" for the empty product.
inline std::string partial_monomial_string(Mask s) {
  if (!s) return "1";
  std::string out;
  for (int i = 1; s; ++i, s >>= 1)
    if (s & 1u) out += (out.empty() ? "d" : "^d") + std::to_string(i);
  return out;
}

/// K+(X) = Ind from g^{-1}-complement: basis ∂_S ⊗ x at index S·dim(X) + x, with g^> killing 1 ⊗ X.
inline ModulePtr kac_plus(const ModulePtr& x, int n) {
  if (x->rank() != n) throw std::invalid_argument("kac_plus: rank mismatch");
  if (n > 12) throw RankError("kac_plus: rank too large");
  std::vector<BasisVector> basis;
  basis.reserve(x->dim() << n);
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    for (const auto& b : x->basis())
      basis.push_back({partial_monomial_string(s) + "⊗" + b.label, b.weight - mask_weight(s), b.zdeg - degree(s),
                       (b.parity + degree(s)) & 1, degree(s)});
  auto straight = std::make_shared<detail::PlusStraightener>(n);
  std::size_t dx = x->dim();
  auto column = [x, straight, dx, n](const Term& t, std::size_t idx) {
    Mask s = static_cast<Mask>(idx / dx);
    return detail::expand_pieces(straight->act(t, s), *x, idx % dx, n);
  };
  return make_module(n, Scope::w, std::move(basis), column, "K+(" + x->name() + ")");
}

namespace detail {

/// PBW monomials in the basis of g^> up to a total degree, and left multiplication in U(g^>).
class PbwBasis {
 public:
  PbwBasis(int n, int max_degree) : n_(n), max_degree_(max_degree) {
    for (const Term& t : all_terms(n))
      if (t.z_degree() >= 1) {
        id_of_[term_index(t, n)] = static_cast<int>(gens_.size());
        gens_.push_back(t);
      }
    std::vector<int> cur;
    enumerate(0, 0, cur);
    std::sort(monos_.begin(), monos_.end(), [this](const auto& a, const auto& b) {
      int da = degree_of(a), db = degree_of(b);
      return da != db ? da < db : a < b;
    });
    for (std::size_t k = 0; k < monos_.size(); ++k) index_[monos_[k]] = k;
  }

  std::size_t size() const { return monos_.size(); }
  const std::vector<int>& mono(std::size_t k) const { return monos_[k]; }
  const Term& gen(int id) const { return gens_[id]; }
  int gen_id(const Term& t) const { return id_of_.at(term_index(t, n_)); }
  int max_degree() const { return max_degree_; }

  int degree_of(const std::vector<int>& m) const {
    int d = 0;
    for (int g : m) d += gens_[g].z_degree();
    return d;
  }
  std::optional<std::size_t> find(const std::vector<int>& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(const std::vector<int>& m) const { return index_.at(m); }

  std::string label(std::size_t k) const {
    if (monos_[k].empty()) return "1";
    std::string s;
    for (int g : monos_[k]) s += (s.empty() ? "(" : "·(") + term_string(gens_[g]) + ")";
    return s;
  }
  Weight weight(std::size_t k) const {
    Weight w;
    for (int g : monos_[k]) w += weight_of(gens_[g]);
    return w;
  }
  int parity(std::size_t k) const {
    int p = 0;
    for (int g : monos_[k]) p += gens_[g].parity();
    return p & 1;
  }

  /// y·m in U(g^>) as a combination of monomial indices; degree must stay within the cap.
  std::map<std::size_t, Rational> left_multiply(int y, std::size_t m) {
    std::uint64_t key = (static_cast<std::uint64_t>(y) << 32) | m;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    std::map<std::size_t, Rational> out;
    const auto& mono = monos_[m];
    auto add = [&out](std::size_t k, const Rational& c) {
      if (c == 0) return;
      auto [it, inserted] = out.try_emplace(k, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    };
    const Term& ty = gens_[y];
    if (mono.empty() || y < mono.front() || (y == mono.front() && ty.parity() == 0)) {
      std::vector<int> next{y};
      next.insert(next.end(), mono.begin(), mono.end());
      add(index(next), 1);
    } else {
      int t0 = mono.front();
      std::vector<int> tail(mono.begin() + 1, mono.end());
      std::size_t tail_idx = index(tail);
      if (y == t0) {
        // y odd: y·y = ½[y, y]
        for (auto br = bracket(ty, ty, n_); const auto& [t, c] : br.terms())
          for (const auto& [k, d] : left_multiply(gen_id(t), tail_idx)) add(k, c * d / 2);
      } else {
        // y t0 T' = (−1)^{p(y)p(t0)} t0 (y T') + [y, t0] T'
        int s = sign_of_power(ty.parity() * gens_[t0].parity());
        for (const auto& [k, d] : left_multiply(y, tail_idx)) {
          std::vector<int> next{t0};
          next.insert(next.end(), monos_[k].begin(), monos_[k].end());
          add(index(next), s * d);
        }
        for (auto br = bracket(ty, gens_[t0], n_); const auto& [t, c] : br.terms())
          for (const auto& [k, d] : left_multiply(gen_id(t), tail_idx)) add(k, c * d);
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.try_emplace(key, std::move(out)).first->second;
  }

 private:
  void enumerate(int start, int deg, std::vector<int>& cur) {
    monos_.push_back(cur);
    for (int g = start; g < static_cast<int>(gens_.size()); ++g) {
      int d = gens_[g].z_degree();
      if (deg + d > max_degree_) continue;
      cur.push_back(g);
      enumerate(gens_[g].parity() ? g + 1 : g, deg + d, cur);
      cur.pop_back();
    }
  }

  int n_;
  int max_degree_;
  std::vector<Term> gens_;
  std::map<std::size_t, int> id_of_;
  std::vector<std::vector<int>> monos_;
  std::map<std::vector<int>, std::size_t> index_;
  std::mutex mu_;
  std::unordered_map<std::uint64_t, std::map<std::size_t, Rational>> memo_;
};

/// w·(u ⊗ ·) in K-, memoized on (w, u).
class MinusStraightener {
 public:
  explicit MinusStraightener(std::shared_ptr<PbwBasis> pbw, int n) : pbw_(std::move(pbw)), n_(n) {}

  std::vector<Piece> act(const Term& w, std::size_t u) {
    std::uint64_t key = (static_cast<std::uint64_t>(term_index(w, n_)) << 32) | u;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    std::map<std::pair<std::size_t, long>, Rational> acc;
    const auto& mono = pbw_->mono(u);
    if (mono.empty()) {
      if (w.z_degree() == 0) add_piece(acc, 0, static_cast<long>(term_index(w, n_)), 1);
      else if (w.z_degree() >= 1) add_piece(acc, pbw_->index({pbw_->gen_id(w)}), -1, 1);
    } else {
      // w y u' = [w, y] u' + (−1)^{p(w)p(y)} y (w u')
      int y = mono.front();
      std::vector<int> tail(mono.begin() + 1, mono.end());
      std::size_t tail_idx = pbw_->index(tail);
      for (auto br = bracket(w, pbw_->gen(y), n_); const auto& [t, c] : br.terms())
        for (const auto& p : act(t, tail_idx)) add_piece(acc, p.mono, p.op, c * p.coeff);
      int s = sign_of_power(w.parity() * pbw_->gen(y).parity());
      for (const auto& p : act(w, tail_idx))
        for (const auto& [k, d] : pbw_->left_multiply(y, p.mono)) add_piece(acc, k, p.op, s * d * p.coeff);
    }
    auto pieces = to_pieces(acc);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.try_emplace(key, std::move(pieces)).first->second;
  }

 private:
  std::shared_ptr<PbwBasis> pbw_;
  int n_;
  std::mutex mu_;
  std::unordered_map<std::uint64_t, std::vector<Piece>> memo_;
};

}  // namespace detail

/// Layers 0..D of K-(X) = S(g^>) ⊗ X with g^{-1} killing 1 ⊗ X. Outputs of degree above D are
/// dropped, so the module is flagged lossy; singular vectors for b^min stay exact.
inline ModulePtr kac_minus_truncated(const ModulePtr& x, int n, int max_degree) {
  if (x->rank() != n) throw std::invalid_argument("kac_minus_truncated: rank mismatch");
  if (max_degree < 1) throw std::invalid_argument("kac_minus_truncated: degree cutoff must be >= 1");
  auto pbw = std::make_shared<detail::PbwBasis>(n, max_degree);
  std::vector<BasisVector> basis;
  basis.reserve(pbw->size() * x->dim());
  for (std::size_t k = 0; k < pbw->size(); ++k) {
    std::string ml = pbw->label(k);
    Weight mw = pbw->weight(k);
    int md = pbw->degree_of(pbw->mono(k)), mp = pbw->parity(k);
    for (const auto& b : x->basis())
      basis.push_back({ml + "⊗" + b.label, b.weight + mw, b.zdeg + md, (b.parity + mp) & 1, md});
  }
  auto straight = std::make_shared<detail::MinusStraightener>(pbw, n);
  std::size_t dx = x->dim();
  auto column = [x, pbw, straight, dx, n, max_degree](const Term& t, std::size_t idx) {
    std::size_t u = idx / dx;
    if (pbw->degree_of(pbw->mono(u)) + t.z_degree() > max_degree) return SparseVec{};
    return detail::expand_pieces(straight->act(t, u), *x, idx % dx, n);
  };
  bool lossy = n >= 2;
  return make_module(n, Scope::w, std::move(basis), column,
                     "K-(" + x->name() + ")<=" + std::to_string(max_degree), lossy);
}

/// Scalar by which I_n = Σ ξ_i∂_i acts on each layer; nullopt if some basis vector is not an eigenvector
/// or two vectors of one layer disagree.
inline std::optional<std::map<int, Rational>> grading_operator_eigenvalues(const Module& m) {
  int n = m.rank();
  WElement in(n);
  for (int i = 1; i <= n; ++i) in += WElement::unit(n, i, i);
  std::map<int, Rational> out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    SparseVec v = m.act(in, SparseVec::unit(i));
    Rational c = v.at(i);
    if (!(v == SparseVec::unit(i, c))) return std::nullopt;
    auto [it, inserted] = out.try_emplace(m.basis(i).layer, c);
    if (!inserted && it->second != c) return std::nullopt;
  }
  return out;
}

struct Typicality {
  bool typical = true;
  int i = 0;  ///< witness index when atypical
  int a = 0;  ///< witness coefficient when atypical
};

/// Atypical iff ν = aε_i + ε_{i+1} + ... + ε_n; the witness uses the largest such i.
inline Typicality typicality(const Weight& nu, int n) {
  if (nu.support_bound() > n) throw std::invalid_argument("typicality: weight not supported on 1..n");
  auto c = nu.dense(n);
  for (int i = n; i >= 1; --i) {
    bool ok = true;
    for (int k = 1; k < i && ok; ++k) ok = c[k - 1] == 0;
    for (int k = i + 1; k <= n && ok; ++k) ok = c[k - 1] == 1;
    if (ok) return {false, i, c[i - 1]};
  }
  return {};
}

struct Primitive {
  GradeKey grade;
  int layer = 0;
  SparseVec vector;
};

/// Singular vectors for b outside layer 0 (the generating copy of X).
inline std::vector<Primitive> find_primitive(const Module& m, const BorelOrder& b) {
  auto terms = usable_raising_terms(m, b);
  std::vector<Primitive> out;
  for (const auto& [g, members] : m.grades()) {
    int layer = m.basis(members.front()).layer;
    if (layer == 0) continue;
    for (auto& v : grade_kernel(m, g, terms)) out.push_back({g, layer, std::move(v)});
  }
  return out;
}

/// Highest weight vector of a cyclic gl-module built by gl_simple (its first basis vector).
inline SparseVec generator_of(const Module& x) {
  if (x.dim() == 0) throw std::invalid_argument("generator_of: zero module");
  return SparseVec::unit(0);
}

}  // namespace superw
