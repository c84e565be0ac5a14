#pragma once

// Generic operations on graded weight modules: characters, closures, submodules and quotients,
// singular vectors, simplicity, duals, tensor products, invariants and homomorphism spaces.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "module.hpp"

namespace superw {

// ---------------------------------------------------------------- characters

struct Character {
  std::map<GradeKey, long long> dims;

  long long total() const {
    long long s = 0;
    for (const auto& [g, d] : dims) s += d;
    return s;
  }
  friend bool operator==(const Character&, const Character&) = default;
};

inline Character character(const Module& m) {
  Character ch;
  for (const auto& [g, members] : m.grades()) ch.dims[g] = static_cast<long long>(members.size());
  return ch;
}

/// First grade where the characters differ, described in words; empty when they agree.
inline std::string character_difference(const Character& a, const Character& b) {
  auto describe = [](const GradeKey& g, long long x, long long y) {
    return "grade (" + g.weight.to_string() + ", zdeg " + std::to_string(g.zdeg) + ", parity " +
           std::to_string(g.parity) + "): " + std::to_string(x) + " vs " + std::to_string(y);
  };
  for (const auto& [g, d] : a.dims) {
    auto it = b.dims.find(g);
    long long e = it == b.dims.end() ? 0 : it->second;
    if (d != e) return describe(g, d, e);
  }
  for (const auto& [g, e] : b.dims)
    if (!a.dims.count(g)) return describe(g, 0, e);
  return {};
}

// ---------------------------------------------------------------- graded subspaces

inline DenseVec to_local(const Module& m, const GradeKey& g, const SparseVec& v) {
  const auto& members = m.grade_members(g);
  DenseVec d(members.size(), Rational(0));
  for (const auto& [i, c] : v.entries()) {
    if (!(m.grade(i) == g)) throw InternalError("to_local: vector leaves its grade");
    d[m.local_index(i)] = c;
  }
  return d;
}

inline SparseVec from_local(const Module& m, const GradeKey& g, const DenseVec& d) {
  const auto& members = m.grade_members(g);
  std::map<std::size_t, Rational> out;
  for (std::size_t l = 0; l < d.size(); ++l)
    if (d[l] != 0) out.emplace(members[l], d[l]);
  return SparseVec::from_map(out);
}

/// A graded subspace of a module, stored as an echelon basis per grade.
class Span {
 public:
  explicit Span(ModulePtr m) : m_(std::move(m)) {}

  const ModulePtr& module() const { return m_; }
  std::size_t dim() const { return vectors_.size(); }
  const SparseVec& vector(std::size_t k) const { return vectors_[k]; }
  const GradeKey& grade(std::size_t k) const { return grades_[k]; }

  /// Adds a homogeneous vector; returns the index of the new basis vector when it enlarged the span.
  std::optional<std::size_t> add_homogeneous(const GradeKey& g, const SparseVec& v) {
    if (v.is_zero()) return std::nullopt;
    Block& b = block(g);
    DenseVec d = to_local(*m_, g, v);
    b.ech.reduce(d);
    if (!Echelon::leading(d)) return std::nullopt;
    b.ech.append_reduced(d);
    b.members.push_back(vectors_.size());
    vectors_.push_back(from_local(*m_, g, b.ech.rows().back()));
    grades_.push_back(g);
    return vectors_.size() - 1;
  }

  void add(const SparseVec& v) {
    for (const auto& [g, part] : split_by_grade(*m_, v)) add_homogeneous(g, part);
  }

  /// Coordinates of a homogeneous vector in the span basis, or nullopt when it lies outside.
  std::optional<SparseVec> coordinates(const GradeKey& g, const SparseVec& v) const {
    if (v.is_zero()) return SparseVec{};
    auto it = blocks_.find(g);
    if (it == blocks_.end()) return std::nullopt;
    DenseVec d = to_local(*m_, g, v);
    std::vector<std::pair<std::size_t, Rational>> coeffs;
    it->second.ech.reduce(d, &coeffs);
    if (Echelon::leading(d)) return std::nullopt;
    Accumulator acc;
    for (const auto& [r, c] : coeffs) acc.add(it->second.members[r], c);
    return acc.take();
  }

  bool contains(const SparseVec& v) const {
    for (const auto& [g, part] : split_by_grade(*m_, v))
      if (!coordinates(g, part)) return false;
    return true;
  }

  /// v minus its projection along the span onto the non-pivot coordinates (homogeneous v).
  DenseVec residual(const GradeKey& g, const SparseVec& v) const {
    DenseVec d = to_local(*m_, g, v);
    auto it = blocks_.find(g);
    if (it != blocks_.end()) it->second.ech.reduce(d);
    return d;
  }

  bool is_pivot(const GradeKey& g, std::size_t local) const {
    auto it = blocks_.find(g);
    return it != blocks_.end() && it->second.ech.is_pivot(local);
  }

  std::size_t grade_rank(const GradeKey& g) const {
    auto it = blocks_.find(g);
    return it == blocks_.end() ? 0 : it->second.ech.rank();
  }

 private:
  struct Block {
    Echelon ech;
    std::vector<std::size_t> members;  ///< span index of each echelon row
  };
  Block& block(const GradeKey& g) {
    auto it = blocks_.find(g);
    if (it == blocks_.end()) it = blocks_.emplace(g, Block{Echelon(m_->grade_members(g).size()), {}}).first;
    return it->second;
  }

  ModulePtr m_;
  std::map<GradeKey, Block> blocks_;
  std::vector<SparseVec> vectors_;
  std::vector<GradeKey> grades_;
};

inline constexpr std::size_t kDefaultBudget = 50'000'000;

/// Enlarges s to the smallest subspace stable under the given terms. Counts one step per
/// (vector, term) application and throws BudgetExceeded past the budget.
inline void close_under(Span& s, const std::vector<Term>& terms, std::size_t budget = kDefaultBudget,
                        std::size_t stop_at_dim = 0) {
  const Module& m = *s.module();
  std::size_t steps = 0;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    for (const Term& t : terms) {
      if (++steps > budget) throw BudgetExceeded("closure exceeded its step budget");
      SparseVec w = m.act(t, s.vector(k));
      if (!w.is_zero()) s.add_homogeneous(shifted(s.grade(k), t), w);
    }
    if (stop_at_dim && s.dim() >= stop_at_dim) return;
  }
}

/// Subspace generated by seeds under the module's generating terms.
inline std::shared_ptr<Span> closure(const ModulePtr& m, const std::vector<SparseVec>& seeds,
                                     std::size_t budget = kDefaultBudget, const std::vector<Term>* terms = nullptr) {
  auto s = std::make_shared<Span>(m);
  for (const auto& v : seeds) s->add(v);
  close_under(*s, terms ? *terms : m->generators(), budget);
  return s;
}

/// The span as a module in its own right. Labels are those of the leading basis vectors.
inline ModulePtr subspace_module(std::shared_ptr<const Span> s, Scope scope, std::string name = "") {
  const ModulePtr& m = s->module();
  std::vector<BasisVector> basis;
  for (std::size_t k = 0; k < s->dim(); ++k) {
    std::size_t lead = s->vector(k).entries().front().first;
    BasisVector b = m->basis(lead);
    basis.push_back(b);
  }
  if (name.empty()) name = "sub(" + m->name() + ")";
  auto column = [s](const Term& t, std::size_t k) {
    const Module& mm = *s->module();
    SparseVec w = mm.act(t, s->vector(k));
    if (w.is_zero()) return SparseVec{};
    auto coords = s->coordinates(shifted(s->grade(k), t), w);
    if (!coords) throw InternalError("subspace is not stable under " + term_string(t));
    return *coords;
  };
  return make_module(m->rank(), scope, std::move(basis), column, std::move(name), m->lossy());
}

inline ModulePtr submodule_generated(const ModulePtr& m, const std::vector<SparseVec>& seeds,
                                     std::size_t budget = kDefaultBudget) {
  for (const auto& v : seeds)
    if (v.is_zero()) throw std::invalid_argument("submodule_generated: zero seed");
  return subspace_module(closure(m, seeds, budget), m->scope());
}

/// M/N for a stable subspace N of M; basis = the non-pivot basis vectors of each grade.
inline ModulePtr quotient_module(std::shared_ptr<const Span> n, std::string name = "") {
  const ModulePtr& m = n->module();
  std::vector<BasisVector> basis;
  auto qindex = std::make_shared<std::vector<long>>(m->dim(), -1);
  for (const auto& [g, members] : m->grades())
    for (std::size_t l = 0; l < members.size(); ++l)
      if (!n->is_pivot(g, l)) {
        (*qindex)[members[l]] = static_cast<long>(basis.size());
        basis.push_back(m->basis(members[l]));
      }
  std::vector<std::size_t> orig(basis.size());
  for (std::size_t i = 0; i < m->dim(); ++i)
    if ((*qindex)[i] >= 0) orig[(*qindex)[i]] = i;
  if (name.empty()) name = m->name() + "/sub";
  auto column = [n, qindex, orig](const Term& t, std::size_t q) {
    const Module& mm = *n->module();
    const SparseVec& w = mm.column(t, orig[q]);
    if (w.is_zero()) return SparseVec{};
    GradeKey g = shifted(mm.grade(orig[q]), t);
    DenseVec r = n->residual(g, w);
    const auto& members = mm.grade_members(g);
    Accumulator acc;
    for (std::size_t l = 0; l < r.size(); ++l) {
      if (r[l] == 0) continue;
      long qi = (*qindex)[members[l]];
      if (qi < 0) throw InternalError("quotient residual hits a pivot");
      acc.add(static_cast<std::size_t>(qi), r[l]);
    }
    return acc.take();
  };
  return make_module(m->rank(), m->scope(), std::move(basis), column, std::move(name), m->lossy());
}

// ---------------------------------------------------------------- kernels and singular vectors

/// Basis of the joint kernel of the given terms inside one grade.
inline std::vector<SparseVec> grade_kernel(const Module& m, const GradeKey& g, const std::vector<Term>& terms) {
  const auto& members = m.grade_members(g);
  std::vector<SparseVec> out;
  if (members.empty()) return out;
  std::map<std::pair<std::size_t, std::size_t>, DenseVec> rows;
  for (std::size_t ti = 0; ti < terms.size(); ++ti)
    for (std::size_t l = 0; l < members.size(); ++l)
      for (const auto& [k, c] : m.column(terms[ti], members[l]).entries()) {
        auto [it, inserted] = rows.try_emplace({ti, k});
        if (inserted) it->second.assign(members.size(), Rational(0));
        it->second[l] = c;
      }
  Echelon e(members.size());
  for (auto& [key, row] : rows) {
    e.insert(std::move(row));
    if (e.rank() == members.size()) return out;
  }
  for (const auto& u : e.nullspace()) out.push_back(from_local(m, g, u));
  return out;
}

/// Per grade, a basis of the joint kernel of the given terms (grades with trivial kernel omitted).
inline std::map<GradeKey, std::vector<SparseVec>> joint_kernel(const Module& m, const std::vector<Term>& terms) {
  std::map<GradeKey, std::vector<SparseVec>> out;
  for (const auto& [g, members] : m.grades()) {
    auto ns = grade_kernel(m, g, terms);
    if (!ns.empty()) out.emplace(g, std::move(ns));
  }
  return out;
}

/// Raising terms of b usable on m: the gl part only for gl-modules.
inline std::vector<Term> usable_raising_terms(const Module& m, const BorelOrder& b) {
  if (b.rank != m.rank()) throw std::invalid_argument("Borel order rank differs from module rank");
  if (m.scope() == Scope::gl) return raising_terms(b.with(Extension::zero));
  if (m.lossy() && b.extension == Extension::max)
    throw std::domain_error("b^max singular vectors are not determined on a truncated module");
  return raising_terms(b);
}

inline std::map<GradeKey, std::vector<SparseVec>> singular_vectors(const Module& m, const BorelOrder& b) {
  return joint_kernel(m, usable_raising_terms(m, b));
}

inline std::size_t total_dim(const std::map<GradeKey, std::vector<SparseVec>>& spaces) {
  std::size_t s = 0;
  for (const auto& [g, v] : spaces) s += v.size();
  return s;
}

// ---------------------------------------------------------------- simplicity

enum class Verdict { simple, not_simple, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::simple: return "simple";
    case Verdict::not_simple: return "not-simple";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SimplicityResult {
  Verdict verdict = Verdict::inconclusive;
  std::size_t singular_dim = 0;
  /// Generator of a proper submodule when not simple.
  std::optional<SparseVec> witness;
  std::optional<GradeKey> witness_grade;
  std::size_t witness_dim = 0;
  /// Full-matrix-algebra check modulo a prime, when the module is small enough.
  std::optional<bool> burnside_full;
  std::string reason;
};

/// Whether the operators of the generating terms generate the full matrix algebra, computed modulo
/// 2^61-1; nullopt above max_dim.
inline std::optional<bool> burnside_full_rank(const Module& m, std::size_t max_dim = 16) {
  std::size_t d = m.dim();
  if (d == 0 || d > max_dim) return std::nullopt;
  using Mat = std::vector<std::uint64_t>;  // row-major d×d
  std::vector<Mat> gens;
  for (const Term& t : m.generators()) {
    Mat g(d * d, 0);
    bool nonzero = false;
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [k, c] : m.column(t, i).entries()) {
        g[k * d + i] = modp::reduce(c);
        nonzero = true;
      }
    if (nonzero) gens.push_back(std::move(g));
  }
  modp::Echelon e(d * d);
  std::vector<Mat> basis;
  Mat id(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1;
  e.insert(id);
  basis.push_back(id);
  for (std::size_t k = 0; k < basis.size() && e.rank() < d * d; ++k)
    for (const auto& g : gens) {
      Mat p(d * d, 0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
          std::uint64_t a = g[r * d + s];
          if (!a) continue;
          for (std::size_t c = 0; c < d; ++c)
            if (basis[k][s * d + c]) p[r * d + c] = modp::add(p[r * d + c], modp::mul(a, basis[k][s * d + c]));
        }
      if (e.insert(p)) basis.push_back(std::move(p));
    }
  return e.rank() == d * d;
}

/// Exact simplicity test. Every raising term of b(<)^max (gl part for gl-modules) strictly increases
/// (Z-degree, height), so each nonzero submodule contains a singular vector; M is simple exactly when
/// every nonzero singular vector generates M.
inline SimplicityResult is_simple(const ModulePtr& m, std::size_t budget = kDefaultBudget) {
  if (m->dim() == 0) throw std::invalid_argument("is_simple: zero module");
  if (m->lossy()) throw std::domain_error("is_simple: module is truncated");
  SimplicityResult res;
  res.burnside_full = burnside_full_rank(*m);
  BorelOrder b{OrderKind::natural, m->rank(), m->scope() == Scope::w ? Extension::max : Extension::zero};
  std::map<GradeKey, std::vector<SparseVec>> sing;
  try {
    sing = singular_vectors(*m, b);
  } catch (const BudgetExceeded&) {
    res.reason = "budget exhausted computing singular vectors";
    return res;
  }
  res.singular_dim = total_dim(sing);
  if (res.singular_dim == 0) throw InternalError("module without singular vectors");
  bool multi = false;
  try {
    for (const auto& [g, vs] : sing) {
      if (vs.size() > 1) multi = true;
      for (const auto& v : vs) {
        auto s = std::make_shared<Span>(m);
        s->add(v);
        close_under(*s, m->generators(), budget, m->dim());
        if (s->dim() < m->dim()) {
          res.verdict = Verdict::not_simple;
          res.witness = v;
          res.witness_grade = g;
          res.witness_dim = s->dim();
          res.reason = "singular vector of weight " + g.weight.to_string() + " generates a submodule of dimension " +
                       std::to_string(s->dim()) + " < " + std::to_string(m->dim());
          return res;
        }
      }
    }
  } catch (const BudgetExceeded&) {
    res.reason = "budget exhausted during closure";
    return res;
  }
  if (multi) {
    res.reason = "a singular weight space has dimension > 1 and each basis vector generates the module";
    return res;
  }
  res.verdict = Verdict::simple;
  res.reason = "each singular line generates the module";
  return res;
}

// ---------------------------------------------------------------- duals and tensor products

/// Dual module with (x·φ)(v) = −(−1)^{p(x)p(φ)} φ(x·v); basis index k is the dual of e_k.
inline ModulePtr dual(const ModulePtr& m) {
  std::vector<BasisVector> basis;
  basis.reserve(m->dim());
  for (const auto& b : m->basis()) basis.push_back({b.label + "*", -b.weight, -b.zdeg, b.parity, -b.layer});
  auto column = [m](const Term& t, std::size_t k) {
    const BasisVector& bk = m->basis(k);
    GradeKey src{bk.weight - weight_of(t), bk.zdeg - t.z_degree(), (bk.parity + t.parity()) & 1};
    Rational sign = -sign_of_power(t.parity() * bk.parity);
    std::map<std::size_t, Rational> out;
    for (std::size_t i : m->grade_members(src)) {
      Rational c = m->column(t, i).at(k);
      if (c != 0) out.emplace(i, sign * c);
    }
    return SparseVec::from_map(out);
  };
  return make_module(m->rank(), m->scope(), std::move(basis), column, "dual(" + m->name() + ")", m->lossy());
}

/// Graded tensor product; basis index i·dim(b) + j for e_i ⊗ f_j.
inline ModulePtr tensor(const ModulePtr& a, const ModulePtr& b) {
  if (a->rank() != b->rank()) throw std::invalid_argument("tensor: rank mismatch");
  std::vector<BasisVector> basis;
  basis.reserve(a->dim() * b->dim());
  for (const auto& u : a->basis())
    for (const auto& v : b->basis())
      basis.push_back({u.label + "⊗" + v.label, u.weight + v.weight, u.zdeg + v.zdeg, (u.parity + v.parity) & 1,
                       u.layer + v.layer});
  std::size_t db = b->dim();
  auto column = [a, b, db](const Term& t, std::size_t idx) {
    std::size_t i = idx / db, j = idx % db;
    Accumulator acc;
    for (const auto& [k, c] : a->column(t, i).entries()) acc.add(k * db + j, c);
    int s = sign_of_power(t.parity() * a->basis(i).parity);
    for (const auto& [k, c] : b->column(t, j).entries()) acc.add(i * db + k, s * c);
    return acc.take();
  };
  Scope scope = (a->scope() == Scope::w && b->scope() == Scope::w) ? Scope::w : Scope::gl;
  return make_module(a->rank(), scope, std::move(basis), column, a->name() + "⊗" + b->name(),
                     a->lossy() || b->lossy());
}

/// Joint kernel of ∂_1..∂_n as a gl(n)-module.
inline ModulePtr psi_invariants(const ModulePtr& m) {
  if (m->scope() != Scope::w) throw std::invalid_argument("psi_invariants needs a W(n)-module");
  auto s = std::make_shared<Span>(m);
  for (const auto& [g, vs] : joint_kernel(*m, component_terms(m->rank(), -1)))
    for (const auto& v : vs) s->add_homogeneous(g, v);
  return subspace_module(s, Scope::gl, "psi(" + m->name() + ")");
}

/// The module's generating terms, restricted to g^0 when either side is a gl-module.
inline std::vector<Term> common_generators(const Module& a, const Module& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  if (a.scope() == Scope::w && b.scope() == Scope::w) return local_terms(a.rank());
  return component_terms(a.rank(), 0);
}

// ---------------------------------------------------------------- homomorphisms

/// Even grade-preserving linear map, stored by columns (image of each source basis vector).
struct LinearMap {
  std::size_t rows = 0;
  std::vector<SparseVec> columns;

  SparseVec apply(const SparseVec& v) const {
    Accumulator acc;
    for (const auto& [i, c] : v.entries()) acc.add(columns[i], c);
    return acc.take();
  }
  bool is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.is_zero(); });
  }
};

inline LinearMap linear_combination(const std::vector<LinearMap>& maps, const std::vector<Rational>& coeffs) {
  LinearMap out{maps.front().rows, std::vector<SparseVec>(maps.front().columns.size())};
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (coeffs[k] != 0)
      for (std::size_t i = 0; i < out.columns.size(); ++i) out.columns[i].axpy(coeffs[k], maps[k].columns[i]);
  return out;
}

/// Checks φ(x·e_i) = x·φ(e_i) for every term x and basis vector e_i; returns a description of the
/// first failure, empty on success.
inline std::string intertwining_defect(const Module& a, const Module& b, const LinearMap& phi,
                                       const std::vector<Term>& terms) {
  for (const Term& t : terms)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      SparseVec lhs = phi.apply(a.column(t, i));
      SparseVec rhs = b.act(t, phi.columns[i]);
      if (!(lhs == rhs)) return "fails for " + term_string(t) + " on [" + a.basis(i).label + "]";
    }
  return {};
}

/// Basis of the space of even grade-preserving module maps a → b commuting with the common
/// generators. Images of a spanning set of a are parametrized by unknowns; generators are propagated
/// through a tracked closure and each linear dependency among the propagated vectors yields
/// constraints on the unknowns.
inline std::vector<LinearMap> homomorphisms(const ModulePtr& a, const ModulePtr& b,
                                            const std::vector<SparseVec>& preferred_seeds = {},
                                            std::size_t budget = kDefaultBudget) {
  auto terms = common_generators(*a, *b);
  using Image = std::map<std::size_t, SparseVec>;  // target basis index -> linear form in the unknowns

  struct Block {
    Echelon ech;
    std::vector<std::size_t> members;
  };
  std::map<GradeKey, Block> blocks;
  std::vector<SparseVec> vecs;
  std::vector<GradeKey> vgrade;
  std::vector<Image> images;
  SparseEchelon constraints;
  std::size_t unknowns = 0;

  auto block = [&](const GradeKey& g) -> Block& {
    auto it = blocks.find(g);
    if (it == blocks.end()) it = blocks.emplace(g, Block{Echelon(a->grade_members(g).size()), {}}).first;
    return it->second;
  };
  auto add_scaled = [](Image& dst, const Image& src, const Rational& s) {
    for (const auto& [k, form] : src) {
      auto& f = dst[k];
      f.axpy(s, form);
      if (f.is_zero()) dst.erase(k);
    }
  };
  // Reduce (w, psi) against the block; either record a new spanning vector or emit constraints.
  auto absorb = [&](const GradeKey& g, const SparseVec& w, Image psi, bool fresh) {
    Block& bl = block(g);
    DenseVec d = to_local(*a, g, w);
    std::vector<std::pair<std::size_t, Rational>> coeffs;
    bl.ech.reduce(d, &coeffs);
    if (Echelon::leading(d)) {
      if (fresh) {
        psi.clear();
        for (std::size_t k : b->grade_members(g)) psi[k] = SparseVec::unit(unknowns++);
      } else {
        for (const auto& [r, c] : coeffs) add_scaled(psi, images[bl.members[r]], -c);
      }
      Rational lead = bl.ech.append_reduced(d);
      if (!fresh && lead != 1)
        for (auto& [k, form] : psi) form *= 1 / lead;
      bl.members.push_back(vecs.size());
      vecs.push_back(from_local(*a, g, bl.ech.rows().back()));
      vgrade.push_back(g);
      images.push_back(std::move(psi));
      return;
    }
    if (fresh) return;
    for (const auto& [r, c] : coeffs) add_scaled(psi, images[bl.members[r]], -c);
    for (const auto& [k, form] : psi) constraints.insert(form);
  };

  std::size_t steps = 0;
  std::size_t done = 0;
  auto run = [&] {
    for (; done < vecs.size(); ++done) {
      for (const Term& t : terms) {
        if (++steps > budget) throw BudgetExceeded("homomorphism solve exceeded its step budget");
        SparseVec w = a->act(t, vecs[done]);
        Image psi;
        for (const auto& [k, form] : images[done])
          for (const auto& [k2, c] : b->column(t, k).entries()) {
            auto& f = psi[k2];
            f.axpy(c, form);
            if (f.is_zero()) psi.erase(k2);
          }
        GradeKey g = shifted(vgrade[done], t);
        if (w.is_zero()) {
          for (const auto& [k, form] : psi) constraints.insert(form);
        } else {
          absorb(g, w, std::move(psi), false);
        }
      }
    }
  };

  for (const auto& s : preferred_seeds)
    for (const auto& [g, part] : split_by_grade(*a, s)) {
      absorb(g, part, {}, true);
      run();
    }
  while (vecs.size() < a->dim()) {
    // seed where the target grade is smallest, to keep the unknown count low
    const GradeKey* best = nullptr;
    std::size_t best_size = 0;
    for (const auto& [g, members] : a->grades()) {
      auto it = blocks.find(g);
      std::size_t have = it == blocks.end() ? 0 : it->second.ech.rank();
      if (have == members.size()) continue;
      std::size_t sz = b->grade_members(g).size();
      if (!best || sz < best_size) {
        best = &g;
        best_size = sz;
      }
    }
    if (!best) throw InternalError("homomorphisms: span incomplete but no deficient grade");
    Block& bl = block(*best);
    const auto& members = a->grade_members(*best);
    std::size_t l = 0;
    while (bl.ech.is_pivot(l)) ++l;
    absorb(*best, SparseVec::unit(members[l]), {}, true);
    run();
  }

  std::vector<LinearMap> out;
  for (const auto& u : constraints.nullspace(unknowns)) {
    auto eval = [&u](const SparseVec& form) {
      Rational s = 0;
      auto ia = form.entries().begin();
      auto ib = u.entries().begin();
      while (ia != form.entries().end() && ib != u.entries().end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else s += (ia++)->second * (ib++)->second;
      }
      return s;
    };
    std::vector<SparseVec> phi_span(vecs.size());
    for (std::size_t r = 0; r < vecs.size(); ++r) {
      std::map<std::size_t, Rational> col;
      for (const auto& [k, form] : images[r]) {
        Rational c = eval(form);
        if (c != 0) col.emplace(k, c);
      }
      phi_span[r] = SparseVec::from_map(col);
    }
    LinearMap phi{b->dim(), std::vector<SparseVec>(a->dim())};
    for (std::size_t i = 0; i < a->dim(); ++i) {
      GradeKey g = a->grade(i);
      Block& bl = blocks.at(g);
      DenseVec d(a->grade_members(g).size(), Rational(0));
      d[a->local_index(i)] = 1;
      std::vector<std::pair<std::size_t, Rational>> coeffs;
      bl.ech.reduce(d, &coeffs);
      Accumulator acc;
      for (const auto& [r, c] : coeffs) acc.add(phi_span[bl.members[r]], c);
      phi.columns[i] = acc.take();
    }
    out.push_back(std::move(phi));
  }
  return out;
}

/// True when φ restricted to every grade is a bijection onto the same grade of the target.
inline bool is_invertible(const Module& a, const Module& b, const LinearMap& phi) {
  if (a.dim() != b.dim()) return false;
  for (const auto& [g, members] : a.grades()) {
    if (b.grade_members(g).size() != members.size()) return false;
    std::vector<DenseVec> rows;
    for (std::size_t i : members) rows.push_back(to_local(b, g, phi.columns[i]));
    if (rank_of(rows, members.size()) != members.size()) return false;
  }
  return true;
}

struct IsoResult {
  bool isomorphic = false;
  std::optional<LinearMap> intertwiner;
  std::size_t hom_dim = 0;
  std::string reason;
};

inline IsoResult iso_check(const ModulePtr& a, const ModulePtr& b, const std::vector<SparseVec>& preferred_seeds = {},
                           std::size_t budget = kDefaultBudget) {
  IsoResult res;
  if (a->rank() != b->rank()) {
    res.reason = "rank " + std::to_string(a->rank()) + " vs " + std::to_string(b->rank());
    return res;
  }
  if (a->dim() != b->dim()) {
    res.reason = "dimension " + std::to_string(a->dim()) + " vs " + std::to_string(b->dim());
    return res;
  }
  if (auto diff = character_difference(character(*a), character(*b)); !diff.empty()) {
    res.reason = "characters differ at " + diff;
    return res;
  }
  auto homs = homomorphisms(a, b, preferred_seeds, budget);
  res.hom_dim = homs.size();
  if (homs.empty()) {
    res.reason = "no nonzero homomorphism";
    return res;
  }
  auto accept = [&](LinearMap phi) {
    if (!is_invertible(*a, *b, phi)) return false;
    if (auto d = intertwining_defect(*a, *b, phi, common_generators(*a, *b)); !d.empty())
      throw InternalError("solved homomorphism is not an intertwiner: " + d);
    res.isomorphic = true;
    res.intertwiner = std::move(phi);
    res.reason = "invertible intertwiner found";
    return true;
  };
  for (const auto& h : homs)
    if (accept(h)) return res;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int attempt = 0; attempt < 16 && homs.size() > 1; ++attempt) {
    std::vector<Rational> coeffs(homs.size());
    for (auto& c : coeffs) c = dist(rng);
    if (accept(linear_combination(homs, coeffs))) return res;
  }
  res.reason = "no invertible element in a " + std::to_string(homs.size()) + "-dimensional Hom space";
  return res;
}

// ---------------------------------------------------------------- representation check

/// act([x,y], v) = act(x, act(y, v)) − (−1)^{p(x)p(y)} act(y, act(x, v)) for basis vectors v;
/// returns the first failure or an empty string.
inline std::string representation_defect(const Module& m, const Term& x, const Term& y) {
  int n = m.rank();
  WElement br = bracket(x, y, n);
  int s = sign_of_power(x.parity() * y.parity());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    SparseVec e = SparseVec::unit(i);
    SparseVec lhs = m.act(br, e);
    SparseVec rhs = m.act(x, m.column(y, i));
    rhs.axpy(-s, m.act(y, m.column(x, i)));
    if (!(lhs == rhs))
      return "[" + term_string(x) + ", " + term_string(y) + "] on [" + m.basis(i).label + "]";
  }
  return {};
}

}  // namespace superw
