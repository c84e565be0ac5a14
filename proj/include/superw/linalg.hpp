#pragma once

// Exact sparse/dense linear algebra over the rationals, plus a word-size prime field.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace superw {

/// Sorted (index, nonzero value) pairs.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  static SparseVec unit(std::size_t i, const Rational& c = 1) {
    SparseVec v;
    if (c != 0) v.e_.emplace_back(i, c);
    return v;
  }
  /// Takes entries in any order; merges duplicates and drops zeros.
  static SparseVec from_map(const std::map<std::size_t, Rational>& m) {
    SparseVec v;
    v.e_.reserve(m.size());
    for (const auto& [i, c] : m)
      if (c != 0) v.e_.emplace_back(i, c);
    return v;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }

  Rational at(std::size_t i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, std::size_t k) { return a.first < k; });
    return (it != e_.end() && it->first == i) ? it->second : Rational(0);
  }

  SparseVec& operator*=(const Rational& s) {
    if (s == 0) e_.clear();
    for (auto& [i, c] : e_) c *= s;
    return *this;
  }
  friend SparseVec operator*(const Rational& s, SparseVec v) { return v *= s; }

  /// this += s·o
  void axpy(const Rational& s, const SparseVec& o) {
    if (s == 0 || o.e_.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
      if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == e_.end() || b->first < a->first) {
        out.emplace_back(b->first, s * b->second);
        ++b;
      } else {
        Rational c = a->second + s * b->second;
        if (c != 0) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    e_ = std::move(out);
  }

  SparseVec& operator+=(const SparseVec& o) {
    axpy(1, o);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    axpy(-1, o);
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> e_;
};

/// Accumulates a linear combination with random-access insertion.
class Accumulator {
 public:
  void add(std::size_t i, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }
  void add(const SparseVec& v, const Rational& s = 1) {
    if (s == 0) return;
    for (const auto& [i, c] : v.entries()) add(i, s * c);
  }
  SparseVec take() const { return SparseVec::from_map(m_); }
  bool empty() const { return m_.empty(); }

 private:
  std::map<std::size_t, Rational> m_;
};

using DenseVec = std::vector<Rational>;

/// Row echelon form over a fixed number of columns. Each row is scaled to a leading 1 and is zero
/// before its pivot, so reducing a vector left to right clears every pivot column.
class Echelon {
 public:
  explicit Echelon(std::size_t cols = 0) : cols_(cols), row_of_(cols, -1) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<DenseVec>& rows() const { return rows_; }
  std::size_t pivot(std::size_t r) const { return pivots_[r]; }
  bool is_pivot(std::size_t c) const { return row_of_[c] >= 0; }

  /// Subtracts multiples of rows from v. coeffs, if given, receives (row, multiple) pairs.
  void reduce(DenseVec& v, std::vector<std::pair<std::size_t, Rational>>* coeffs = nullptr) const {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0 || row_of_[c] < 0) continue;
      const DenseVec& row = rows_[row_of_[c]];
      Rational f = v[c];
      for (std::size_t k = c; k < cols_; ++k)
        if (row[k] != 0) v[k] -= f * row[k];
      if (coeffs) coeffs->emplace_back(row_of_[c], f);
    }
  }

  /// Index of the first nonzero entry, if any.
  static std::optional<std::size_t> leading(const DenseVec& v) {
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) return c;
    return std::nullopt;
  }

  /// Appends an already reduced nonzero vector; returns the leading coefficient it was divided by.
  Rational append_reduced(DenseVec v) {
    auto lead = leading(v);
    if (!lead) throw InternalError("append_reduced: zero vector");
    Rational a = v[*lead];
    if (a != 1)
      for (auto& x : v) x /= a;
    row_of_[*lead] = static_cast<long>(rows_.size());
    pivots_.push_back(*lead);
    rows_.push_back(std::move(v));
    return a;
  }

  /// Reduces and appends; false when v was already in the span.
  bool insert(DenseVec v) {
    reduce(v);
    if (!leading(v)) return false;
    append_reduced(std::move(v));
    return true;
  }

  /// Basis of {u : row·u = 0 for every row}.
  std::vector<DenseVec> nullspace() const {
    std::vector<DenseVec> R = rows_;
    // back-substitute to reduced form
    for (std::size_t r = R.size(); r-- > 0;) {
      std::size_t p = pivots_[r];
      for (std::size_t s = 0; s < R.size(); ++s) {
        if (s == r || R[s][p] == 0) continue;
        Rational f = R[s][p];
        for (std::size_t k = p; k < cols_; ++k)
          if (R[r][k] != 0) R[s][k] -= f * R[r][k];
      }
    }
    std::vector<DenseVec> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (row_of_[f] >= 0) continue;
      DenseVec u(cols_, Rational(0));
      u[f] = 1;
      for (std::size_t r = 0; r < R.size(); ++r)
        if (R[r][f] != 0) u[pivots_[r]] = -R[r][f];
      out.push_back(std::move(u));
    }
    return out;
  }

 private:
  std::size_t cols_;
  std::vector<DenseVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_;
};

/// Echelon form over an unbounded sparse column index set.
class SparseEchelon {
 public:
  std::size_t rank() const { return rows_.size(); }

  /// Returns the reduced form of v (zero iff v lies in the span).
  SparseVec reduce(const SparseVec& v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, c] : v.entries()) acc.emplace(i, c);
    for (auto it = acc.begin(); it != acc.end();) {
      auto p = rows_.find(it->first);
      if (p == rows_.end()) {
        ++it;
        continue;
      }
      std::size_t key = it->first;
      Rational f = it->second;
      for (const auto& [k, c] : p->second.entries()) {
        auto [jt, inserted] = acc.try_emplace(k, -f * c);
        if (!inserted) {
          jt->second -= f * c;
          if (jt->second == 0) acc.erase(jt);
        }
      }
      it = acc.upper_bound(key);
    }
    return SparseVec::from_map(acc);
  }

  bool insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.is_zero()) return false;
    Rational a = r.entries().front().second;
    r *= 1 / a;
    rows_.emplace(r.entries().front().first, std::move(r));
    return true;
  }

  bool is_pivot(std::size_t c) const { return rows_.count(c) != 0; }

  /// Basis of the solution space of row·u = 0 within coordinates [0, cols).
  std::vector<SparseVec> nullspace(std::size_t cols) const {
    // fully reduce the rows, highest pivot first
    std::map<std::size_t, SparseVec> R = rows_;
    for (auto it = R.rbegin(); it != R.rend(); ++it) {
      for (auto& [q, row] : R) {
        if (q == it->first) continue;
        Rational f = row.at(it->first);
        if (f != 0) row.axpy(-f, it->second);
      }
    }
    std::vector<SparseVec> out;
    for (std::size_t f = 0; f < cols; ++f) {
      if (R.count(f)) continue;
      Accumulator u;
      u.add(f, 1);
      for (const auto& [p, row] : R) {
        Rational c = row.at(f);
        if (c != 0) u.add(p, -c);
      }
      out.push_back(u.take());
    }
    return out;
  }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

inline Rational dot(const DenseVec& a, const DenseVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

/// Rank of a dense square or rectangular matrix given as rows.
inline std::size_t rank_of(const std::vector<DenseVec>& rows, std::size_t cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

// Arithmetic modulo the Mersenne prime 2^61 - 1.
namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

/// Image of a rational; throws when the denominator vanishes mod p.
inline std::uint64_t reduce(const Rational& q) {
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (d == 0) throw std::domain_error("denominator divisible by the working prime");
  std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  return mul(n, inv(d));
}

/// Incremental row echelon form over Z/p.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols), row_of_(cols, -1) {}
  std::size_t rank() const { return rows_.size(); }

  bool insert(std::vector<std::uint64_t> v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0 || row_of_[c] < 0) continue;
      const auto& row = rows_[row_of_[c]];
      std::uint64_t f = v[c];
      for (std::size_t k = c; k < cols_; ++k)
        if (row[k]) v[k] = sub(v[k], mul(f, row[k]));
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      std::uint64_t a = inv(v[c]);
      for (auto& x : v) x = mul(x, a);
      row_of_[c] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(v));
      return true;
    }
    return false;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<long> row_of_;
};

}  // namespace modp

}  // namespace superw
