#pragma once

// Finite-dimensional graded weight modules with lazily evaluated action columns.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "walgebra.hpp"

namespace superw {

/// Which algebra acts: gl(n) = g^0 only, or all of W(n).
enum class Scope { gl, w };

struct BasisVector {
  std::string label;
  Weight weight;
  int zdeg = 0;
  int parity = 0;
  int layer = 0;  ///< construction-specific filtration index (PBW degree, |S|, ...)
};

/// Homogeneous component index: weight, Z-degree and parity.
struct GradeKey {
  Weight weight;
  int zdeg = 0;
  int parity = 0;
  friend auto operator<=>(const GradeKey&, const GradeKey&) = default;
  friend bool operator==(const GradeKey&, const GradeKey&) = default;
};

inline GradeKey grade_of(const BasisVector& b) { return {b.weight, b.zdeg, b.parity}; }

/// Grade reached from g by a term of the given weight/degree/parity.
inline GradeKey shifted(const GradeKey& g, const Term& t) {
  return {g.weight + weight_of(t), g.zdeg + t.z_degree(), (g.parity + t.parity()) & 1};
}

class Module {
 public:
  /// Column of the action of a basis term on a basis vector.
  using ColumnFn = std::function<SparseVec(const Term&, std::size_t)>;

  Module(int rank, Scope scope, std::vector<BasisVector> basis, ColumnFn column, std::string name = "",
         bool lossy = false)
      : rank_(rank), scope_(scope), basis_(std::move(basis)), column_(std::move(column)), name_(std::move(name)),
        lossy_(lossy) {
    local_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      auto& g = grades_[grade_of(basis_[i])];
      local_[i] = g.size();
      g.push_back(i);
    }
  }

  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  int rank() const { return rank_; }
  Scope scope() const { return scope_; }
  std::size_t dim() const { return basis_.size(); }
  const std::string& name() const { return name_; }
  /// True when some action outputs were discarded by a truncation.
  bool lossy() const { return lossy_; }

  const BasisVector& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<BasisVector>& basis() const { return basis_; }
  GradeKey grade(std::size_t i) const { return grade_of(basis_[i]); }

  const std::map<GradeKey, std::vector<std::size_t>>& grades() const { return grades_; }
  /// Basis indices of a grade; empty when the grade does not occur.
  const std::vector<std::size_t>& grade_members(const GradeKey& g) const {
    static const std::vector<std::size_t> none;
    auto it = grades_.find(g);
    return it == grades_.end() ? none : it->second;
  }
  /// Position of basis vector i inside its grade.
  std::size_t local_index(std::size_t i) const { return local_[i]; }

  bool accepts(const Term& t) const { return scope_ == Scope::w || t.z_degree() == 0; }

  /// Terms whose iterated brackets span the acting algebra.
  std::vector<Term> generators() const { return scope_ == Scope::w ? local_terms(rank_) : component_terms(rank_, 0); }
  std::vector<Term> acting_terms() const { return scope_ == Scope::w ? all_terms(rank_) : component_terms(rank_, 0); }

  const SparseVec& column(const Term& t, std::size_t i) const {
    if (!accepts(t))
      throw std::invalid_argument("term " + term_string(t) + " does not act on gl-module " + name_);
    std::uint64_t key = static_cast<std::uint64_t>(term_index(t, rank_)) * basis_.size() + i;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    SparseVec col = column_(t, i);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.try_emplace(key, std::move(col)).first->second;
  }

  SparseVec act(const Term& t, const SparseVec& v) const {
    Accumulator acc;
    for (const auto& [i, c] : v.entries()) acc.add(column(t, i), c);
    return acc.take();
  }

  SparseVec act(const WElement& x, const SparseVec& v) const {
    if (x.rank() != rank_)
      throw std::invalid_argument("rank mismatch: element of W(" + std::to_string(x.rank()) + ") on module of rank " +
                                  std::to_string(rank_));
    Accumulator acc;
    for (const auto& [t, a] : x.terms())
      for (const auto& [i, c] : v.entries()) acc.add(column(t, i), a * c);
    return acc.take();
  }

 private:
  int rank_;
  Scope scope_;
  std::vector<BasisVector> basis_;
  ColumnFn column_;
  std::string name_;
  bool lossy_;
  std::map<GradeKey, std::vector<std::size_t>> grades_;
  std::vector<std::size_t> local_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, SparseVec> cache_;
};

using ModulePtr = std::shared_ptr<const Module>;

inline ModulePtr make_module(int rank, Scope scope, std::vector<BasisVector> basis, Module::ColumnFn column,
                             std::string name = "", bool lossy = false) {
  return std::make_shared<const Module>(rank, scope, std::move(basis), std::move(column), std::move(name), lossy);
}

/// Splits v into its grade components.
inline std::map<GradeKey, SparseVec> split_by_grade(const Module& m, const SparseVec& v) {
  std::map<GradeKey, Accumulator> parts;
  for (const auto& [i, c] : v.entries()) parts[m.grade(i)].add(i, c);
  std::map<GradeKey, SparseVec> out;
  for (auto& [g, a] : parts) out.emplace(g, a.take());
  return out;
}

/// Readable form "3/2*[label] - [label]".
inline std::string vector_string(const Module& m, const SparseVec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [i, c] : v.entries()) {
    Rational a = abs(c);
    s += c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    if (a != 1) s += a.get_str() + "*";
    s += "[" + m.basis(i).label + "]";
    first = false;
  }
  return s;
}

}  // namespace superw
