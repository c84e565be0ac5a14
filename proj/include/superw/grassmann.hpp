#pragma once

// The Grassmann algebra Λ(n) over the rationals.
//
// A monomial ξ_{i1}⋯ξ_{ik} (i1 < ... < ik) is the bitmask with bits i-1 set.

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "rational.hpp"
#include "weight.hpp"

namespace superw {

using Mask = std::uint32_t;

inline constexpr int kMaxRank = 30;

inline int degree(Mask m) { return std::popcount(m); }
inline int parity(Mask m) { return std::popcount(m) & 1; }
inline Mask bit(int i) { return Mask{1} << (i - 1); }
inline bool has(Mask m, int i) { return (m >> (i - 1)) & 1u; }

/// Σ_{i ∈ m} ε_i
inline Weight mask_weight(Mask m, int sign = 1) {
  Weight w;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1u) w.add(i, sign);
  return w;
}

/// Sign of the permutation sorting the concatenation a·b, or 0 when a ∩ b ≠ ∅.
inline int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask rest = a; rest; rest &= rest - 1) {
    int i = std::countr_zero(rest);
    inversions += std::popcount(b & ((Mask{1} << i) - 1));
  }
  return sign_of_power(inversions);
}

/// Sign of ∂_i acting on the monomial m (left derivative), 0 when i ∉ m.
inline int partial_sign(int i, Mask m) {
  if (!has(m, i)) return 0;
  return sign_of_power(std::popcount(m & (bit(i) - 1)));
}

/// "x1^x2^x5"; the unit prints as "1".
inline std::string monomial_string(Mask m) {
  if (m == 0) return "1";
  std::string s;
  for (int i = 1; m; ++i, m >>= 1) {
    if (!(m & 1u)) continue;
    if (!s.empty()) s += '^';
    s += 'x' + std::to_string(i);
  }
  return s;
}

/// Parses "x1^x3" or "1".
inline Mask parse_monomial(const std::string& text) {
  if (text == "1") return 0;
  Mask m = 0;
  std::stringstream ss(text);
  std::string item;
  int last = 0;
  while (std::getline(ss, item, '^')) {
    if (item.size() < 2 || item[0] != 'x') throw std::invalid_argument("bad monomial: " + text);
    int i = std::stoi(item.substr(1));
    if (i < 1 || i > kMaxRank) throw std::invalid_argument("index out of range: " + text);
    if (i <= last) throw std::invalid_argument("monomial indices must increase: " + text);
    last = i;
    m |= bit(i);
  }
  return m;
}

class GrassmannElement {
 public:
  using Terms = std::map<Mask, Rational>;

  GrassmannElement() = default;
  explicit GrassmannElement(const Rational& c) { add(0, c); }
  static GrassmannElement monomial(Mask m, const Rational& c = 1) {
    GrassmannElement g;
    g.add(m, c);
    return g;
  }
  static GrassmannElement generator(int i) { return monomial(bit(i)); }

  void add(Mask m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Common degree of all terms; throws std::domain_error when inhomogeneous or zero.
  int homogeneous_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero element");
    int d = degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (degree(m) != d) throw std::domain_error("inhomogeneous Grassmann element");
    return d;
  }

  int homogeneous_parity() const {
    if (terms_.empty()) throw std::domain_error("parity of zero element");
    int p = parity(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (parity(m) != p) throw std::domain_error("element has mixed parity");
    return p;
  }

  GrassmannElement& operator+=(const GrassmannElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  GrassmannElement& operator-=(const GrassmannElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  GrassmannElement& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const Rational& s, GrassmannElement a) { return a *= s; }
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = abs(c);
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (a != 1) os << a.get_str() << (m ? "*" : "");
      if (m || a == 1) os << (m ? monomial_string(m) : (a == 1 ? "1" : ""));
      first = false;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Supercommutative product.
inline GrassmannElement gmul(const GrassmannElement& f, const GrassmannElement& g) {
  GrassmannElement out;
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, d] : g.terms()) {
      int s = merge_sign(a, b);
      if (s) out.add(a | b, s * c * d);
    }
  return out;
}

/// The odd derivation ∂_i with ∂_i(ξ_j) = δ_ij.
inline GrassmannElement apply_partial(int i, const GrassmannElement& f) {
  GrassmannElement out;
  for (const auto& [m, c] : f.terms()) {
    int s = partial_sign(i, m);
    if (s) out.add(m & ~bit(i), s * c);
  }
  return out;
}

/// Constant term f(0).
inline Rational eval_at_zero(const GrassmannElement& f) { return f.coeff(0); }

}  // namespace superw
