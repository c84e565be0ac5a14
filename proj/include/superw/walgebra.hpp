#pragma once

// The Lie superalgebra W(n) of superderivations of Λ(n).

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grassmann.hpp"
#include "order.hpp"

namespace superw {

/// The basis derivation ξ^mask ∂_target.
struct Term {
  Mask mask = 0;
  int target = 1;

  int z_degree() const { return degree(mask) - 1; }
  int parity() const { return (degree(mask) + 1) & 1; }
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Dense index of a term in W(n); ranges over [0, n·2^n).
inline std::size_t term_index(const Term& t, int n) {
  return static_cast<std::size_t>(t.mask) * n + (t.target - 1);
}

inline Term term_at(std::size_t index, int n) {
  return Term{static_cast<Mask>(index / n), static_cast<int>(index % n) + 1};
}

inline Weight weight_of(const Term& t) {
  Weight w = mask_weight(t.mask);
  w.add(t.target, -1);
  return w;
}

inline std::string term_string(const Term& t) {
  std::string d = "d" + std::to_string(t.target);
  return t.mask ? monomial_string(t.mask) + " " + d : d;
}

class WElement {
 public:
  using Terms = std::map<Term, Rational>;

  WElement() = default;
  explicit WElement(int rank) : rank_(rank) {}
  WElement(int rank, const Term& t, const Rational& c = 1) : rank_(rank) { add(t, c); }

  /// ξ_i ∂_j, the matrix unit E_ij of gl(n).
  static WElement unit(int rank, int i, int j) { return WElement(rank, Term{bit(i), j}); }
  static WElement partial(int rank, int j) { return WElement(rank, Term{0, j}); }

  int rank() const { return rank_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Term& t, const Rational& c) {
    if (t.target < 1 || t.target > rank_ || (rank_ < kMaxRank && (t.mask >> rank_)))
      throw std::invalid_argument("term " + term_string(t) + " outside W(" + std::to_string(rank_) + ")");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  WElement& operator+=(const WElement& o) {
    check_rank(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  WElement& operator-=(const WElement& o) {
    check_rank(o);
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  WElement& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }
  friend WElement operator+(WElement a, const WElement& b) { return a += b; }
  friend WElement operator-(WElement a, const WElement& b) { return a -= b; }
  friend WElement operator*(const Rational& s, WElement a) { return a *= s; }
  friend bool operator==(const WElement&, const WElement&) = default;

  void check_rank(const WElement& o) const {
    if (o.rank_ != rank_)
      throw std::invalid_argument("rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
  }

  /// Applies the derivation to f.
  GrassmannElement apply(const GrassmannElement& f) const {
    GrassmannElement out;
    for (const auto& [t, c] : terms_)
      for (const auto& [m, d] : f.terms()) {
        int s = partial_sign(t.target, m);
        if (!s) continue;
        Mask rest = m & ~bit(t.target);
        int s2 = merge_sign(t.mask, rest);
        if (s2) out.add(t.mask | rest, s * s2 * c * d);
      }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
      Rational a = abs(c);
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (a != 1) os << a.get_str() << '*';
      os << term_string(t);
      first = false;
    }
    return os.str();
  }

 private:
  int rank_ = 0;
  Terms terms_;
};

/// Common Z-degree; throws std::domain_error on zero or inhomogeneous input.
inline int z_degree(const WElement& x) {
  if (x.is_zero()) throw std::domain_error("degree of zero element");
  int d = x.terms().begin()->first.z_degree();
  for (const auto& [t, c] : x.terms())
    if (t.z_degree() != d) throw std::domain_error("inhomogeneous element: " + x.to_string());
  return d;
}

inline int parity(const WElement& x) {
  if (x.is_zero()) throw std::domain_error("parity of zero element");
  int p = x.terms().begin()->first.parity();
  for (const auto& [t, c] : x.terms())
    if (t.parity() != p) throw std::domain_error("element has mixed parity: " + x.to_string());
  return p;
}

/// Weight of a nonzero multiple of a basis term.
inline Weight weight_of(const WElement& x) {
  if (x.terms().size() != 1) throw std::domain_error("weight_of needs a single basis term: " + x.to_string());
  return weight_of(x.terms().begin()->first);
}

/// Sign multiplying y∘x in the supercommutator; the flipped variant exists as a negative control.
enum class BracketSign { correct, flipped };

/// Supercommutator x∘y − (−1)^{p(x)p(y)} y∘x of homogeneous derivations, obtained by composing the
/// operators on Λ(n). A derivation D is recovered from its values as D = Σ_j D(ξ_j) ∂_j.
inline WElement bracket_homogeneous(const WElement& x, const WElement& y, BracketSign mode = BracketSign::correct) {
  x.check_rank(y);
  int n = x.rank();
  WElement out(n);
  if (x.is_zero() || y.is_zero()) return out;
  int s = sign_of_power(parity(x) * parity(y));
  if (mode == BracketSign::flipped) s = -s;
  for (int j = 1; j <= n; ++j) {
    auto xi = GrassmannElement::generator(j);
    GrassmannElement value = x.apply(y.apply(xi));
    value -= Rational(s) * y.apply(x.apply(xi));
    for (const auto& [m, c] : value.terms()) out.add(Term{m, j}, c);
  }
  return out;
}

/// Bilinear extension over the homogeneous parts of x and y.
inline WElement bracket(const WElement& x, const WElement& y, BracketSign mode = BracketSign::correct) {
  x.check_rank(y);
  WElement out(x.rank());
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : y.terms())
      out += (a * b) * bracket_homogeneous(WElement(x.rank(), s), WElement(y.rank(), t), mode);
  return out;
}

inline WElement bracket(const Term& s, const Term& t, int n) {
  return bracket_homogeneous(WElement(n, s), WElement(n, t));
}

/// Terms ξ^a ∂_j with |a| = k+1, ordered by mask then j.
inline std::vector<Term> component_terms(int n, int k) {
  std::vector<Term> out;
  if (k < -1 || k > n - 1) return out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (degree(m) == k + 1)
      for (int j = 1; j <= n; ++j) out.push_back(Term{m, j});
  return out;
}

inline std::vector<WElement> basis_of_component(int n, int k) {
  std::vector<WElement> out;
  for (const Term& t : component_terms(n, k)) out.emplace_back(n, t);
  return out;
}

/// Every basis term of W(n), by degree.
inline std::vector<Term> all_terms(int n) {
  std::vector<Term> out;
  for (int k = -1; k <= n - 1; ++k) {
    auto c = component_terms(n, k);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

/// Basis of g^{-1} ⊕ g^0 ⊕ g^1, which generates W(n).
inline std::vector<Term> local_terms(int n) {
  std::vector<Term> out;
  for (int k = -1; k <= 1; ++k) {
    auto c = component_terms(n, k);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

/// Basis terms of the nilradical of the Borel subalgebra b.
inline std::vector<Term> raising_terms(const BorelOrder& b) {
  std::vector<Term> out;
  auto seq = b.sequence();
  for (std::size_t p = 0; p < seq.size(); ++p)
    for (std::size_t q = p + 1; q < seq.size(); ++q) out.push_back(Term{bit(seq[p]), seq[q]});
  if (b.extension == Extension::min) {
    auto c = component_terms(b.rank, -1);
    out.insert(out.end(), c.begin(), c.end());
  } else if (b.extension == Extension::max) {
    for (int k = 1; k <= b.rank - 1; ++k) {
      auto c = component_terms(b.rank, k);
      out.insert(out.end(), c.begin(), c.end());
    }
  }
  return out;
}

inline std::vector<WElement> raising_operators(const BorelOrder& b) {
  std::vector<WElement> out;
  for (const Term& t : raising_terms(b)) out.emplace_back(b.rank, t);
  return out;
}

/// Simple root vectors E_{s_k s_{k+1}} of the gl(n) Borel for consecutive entries of the order.
inline std::vector<Term> simple_raising_terms(const BorelOrder& b) {
  std::vector<Term> out;
  auto seq = b.sequence();
  for (std::size_t p = 0; p + 1 < seq.size(); ++p) out.push_back(Term{bit(seq[p]), seq[p + 1]});
  return out;
}

/// Parses "3/2*x1^x3 d2 - d1". An optional leading monomial "1" is allowed ("1 d2").
inline WElement parse_welement(const std::string& text, int n) {
  WElement out(n);
  std::string s;
  for (char ch : text)
    if (ch != '\t' && ch != '\n') s += ch;
  std::vector<std::pair<int, std::string>> pieces;
  int sign = 1;
  std::string cur;
  auto flush = [&] {
    std::string t = cur;
    t.erase(0, t.find_first_not_of(' '));
    t.erase(t.find_last_not_of(' ') + 1);
    if (!t.empty()) pieces.emplace_back(sign, t);
    else if (!pieces.empty() || sign != 1) throw std::invalid_argument("dangling sign in: " + text);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == '+' || ch == '-') {
      flush();
      sign = ch == '-' ? -1 : 1;
    } else {
      cur += ch;
    }
  }
  flush();
  if (pieces.empty()) throw std::invalid_argument("empty element");
  for (const auto& [sg, piece] : pieces) {
    Rational c = sg;
    std::string body = piece;
    if (auto star = body.find('*'); star != std::string::npos) {
      std::string cs = body.substr(0, star);
      cs.erase(cs.find_last_not_of(' ') + 1);
      c *= parse_rational(cs);
      body = body.substr(star + 1);
    }
    std::istringstream is(body);
    std::vector<std::string> toks;
    for (std::string tok; is >> tok;) toks.push_back(tok);
    if (toks.empty() || toks.size() > 2) throw std::invalid_argument("bad term: " + piece);
    const std::string& d = toks.back();
    if (d.size() < 2 || d[0] != 'd' || !std::all_of(d.begin() + 1, d.end(), ::isdigit))
      throw std::invalid_argument("term must end in d<j>: " + piece);
    Term t{toks.size() == 2 ? parse_monomial(toks[0]) : Mask{0}, std::stoi(d.substr(1))};
    out.add(t, c);
  }
  return out;
}

using BracketFn = std::function<WElement(const WElement&, const WElement&)>;

/// (−1)^{p(x)p(z)}[x,[y,z]] + (−1)^{p(y)p(x)}[y,[z,x]] + (−1)^{p(z)p(y)}[z,[x,y]] for homogeneous x, y, z.
inline WElement jacobi_defect(const BracketFn& br, const WElement& x, const WElement& y, const WElement& z) {
  int px = parity(x), py = parity(y), pz = parity(z);
  WElement out = Rational(sign_of_power(px * pz)) * br(x, br(y, z));
  out += Rational(sign_of_power(py * px)) * br(y, br(z, x));
  out += Rational(sign_of_power(pz * py)) * br(z, br(x, y));
  return out;
}

}  // namespace superw
