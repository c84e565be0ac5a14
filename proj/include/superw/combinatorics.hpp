#pragma once

// Partitions, Littlewood-Richardson coefficients, Schur dimensions and the
// multiplicities of the socle layers of S_λ(V) ⊗ S_μ(V_*).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "order.hpp"
#include "rational.hpp"
#include "weight.hpp"

namespace superw {

class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  /// "p1,p2,...,pk"; the empty string is ∅.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "0") return Partition{};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("bad partition: '" + text + "'");
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad partition: '" + text + "'");
      parts.push_back(v);
    }
    return Partition(std::move(parts));
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  /// Row i (0-based); 0 beyond the last row.
  int row(int i) const { return i < length() ? parts_[i] : 0; }

  bool contains(const Partition& o) const {
    if (o.length() > length()) return false;
    for (int i = 0; i < o.length(); ++i)
      if (o.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Partitions of k in reverse lexicographic order ((k) first).
inline std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  if (k == 0) return {Partition{}};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

/// All partitions contained in `outer` of the given size.
inline std::vector<Partition> subpartitions(const Partition& outer, int size) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(size))
    if (outer.contains(p)) out.push_back(p);
  return out;
}

/// N^ν_{λ,μ}: coefficient of s_ν in s_λ s_μ, counted as LR tableaux of shape
/// ν/λ and content μ whose reverse reading word is a lattice word.
inline long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu)) return 0;
  if (mu.empty()) return lam == nu ? 1 : 0;

  // Cells in reading order: rows top to bottom, each row right to left.
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < nu.length(); ++r)
    for (int c = nu.row(r) - 1; c >= lam.row(r); --c) cells.push_back({r, c});

  const int rows = nu.length();
  const int cols = nu.row(0);
  std::vector<int> grid(static_cast<std::size_t>(rows) * cols, 0);
  auto at = [&](int r, int c) -> int& { return grid[static_cast<std::size_t>(r) * cols + c]; };
  std::vector<int> used(mu.length() + 1, 0);
  long long count = 0;

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    // Row weakly increases left to right: the cell to the right is already filled.
    int hi = mu.length();
    if (c + 1 < nu.row(r)) hi = std::min(hi, at(r, c + 1));
    // Column strictly increases downward.
    int lo = 1;
    if (r > 0 && c >= lam.row(r - 1)) lo = at(r - 1, c) + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu.row(v - 1)) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice condition
      ++used[v];
      at(r, c) = v;
      self(self, k + 1);
      at(r, c) = 0;
      --used[v];
    }
  };
  rec(rec, 0);
  return count;
}

/// dim S_λ(C^n) by the hook-content formula.
inline long long schur_dim(const Partition& lam, int n) {
  if (lam.length() > n) return 0;
  mpz_class num = 1, den = 1;
  std::vector<int> conj(lam.row(0), 0);
  for (int r = 0; r < lam.length(); ++r)
    for (int c = 0; c < lam.row(r); ++c) ++conj[c];
  for (int r = 0; r < lam.length(); ++r) {
    for (int c = 0; c < lam.row(r); ++c) {
      num *= n + c - r;
      den *= (lam.row(r) - c - 1) + (conj[c] - r - 1) + 1;
    }
  }
  mpz_class q = num / den;
  return q.get_si();
}

using PartitionPair = std::pair<Partition, Partition>;

/// Pairs (λ', μ') with multiplicity Σ_{|γ|=k} N^λ_{γ,λ'} N^μ_{γ,μ'} in layer k.
/// N^λ_{γ,λ'} is the coefficient of s_λ in s_γ s_{λ'}.
inline std::map<PartitionPair, long long> socle_layer_mults(const Partition& lam, const Partition& mu, int k) {
  std::map<PartitionPair, long long> out;
  if (k < 0 || k > lam.size() || k > mu.size()) return out;
  const auto lam_rest = subpartitions(lam, lam.size() - k);
  const auto mu_rest = subpartitions(mu, mu.size() - k);
  for (const auto& gamma : partitions_of(k)) {
    if (!lam.contains(gamma) || !mu.contains(gamma)) continue;
    for (const auto& lp : lam_rest) {
      long long a = lr_coefficient(gamma, lp, lam);
      if (a == 0) continue;
      for (const auto& mp : mu_rest) {
        long long b = lr_coefficient(gamma, mp, mu);
        if (b != 0) out[{lp, mp}] += a * b;
      }
    }
  }
  return out;
}

/// Smallest rank at which the stable highest weight of (λ, μ) is defined.
inline int min_rank(const Partition& lam, const Partition& mu, OrderKind kind) {
  if (kind == OrderKind::interleaved) return std::max(1, 2 * std::max(lam.length(), mu.length()));
  return std::max(1, lam.length() + mu.length());
}

/// Highest weight of V_{λ,μ} at rank n for the given order:
///   interleaved: Σ λ_i ε_{2i-1} - Σ μ_j ε_{2j}
///   natural:     λ_1 ε_1 + ... + λ_k ε_k - μ_l ε_{n-l+1} - ... - μ_1 ε_n
inline Weight stable_highest_weight(const Partition& lam, const Partition& mu, OrderKind kind, int n) {
  if (n < min_rank(lam, mu, kind))
    throw RankError("rank " + std::to_string(n) + " too small for (" + lam.to_string() + "|" +
                    mu.to_string() + ")");
  Weight w;
  if (kind == OrderKind::interleaved) {
    for (int i = 0; i < lam.length(); ++i) w.add(2 * i + 1, lam.row(i));
    for (int j = 0; j < mu.length(); ++j) w.add(2 * j + 2, -mu.row(j));
  } else {
    for (int i = 0; i < lam.length(); ++i) w.add(i + 1, lam.row(i));
    for (int j = 0; j < mu.length(); ++j) w.add(n - j, -mu.row(j));
  }
  return w;
}

}  // namespace superw
