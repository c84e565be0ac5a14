#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace superw {

/// Finitely supported integer combination of ε_1, ε_2, ....
/// Stored without trailing zeros, so equal weights compare equal at any rank.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) { trim(); }

  static Weight epsilon(int i, int coeff = 1) {
    Weight w;
    w.add(i, coeff);
    return w;
  }

  /// Coefficient of ε_i (1-based).
  int operator[](int i) const {
    return (i >= 1 && static_cast<std::size_t>(i) <= c_.size()) ? c_[i - 1] : 0;
  }

  void add(int i, int delta) {
    if (delta == 0) return;
    if (static_cast<std::size_t>(i) > c_.size()) c_.resize(i, 0);
    c_[i - 1] += delta;
    trim();
  }

  int total() const {
    int s = 0;
    for (int v : c_) s += v;
    return s;
  }

  /// Largest index with a nonzero coefficient, 0 for the zero weight.
  int support_bound() const { return static_cast<int>(c_.size()); }
  bool is_zero() const { return c_.empty(); }
  const std::vector<int>& coords() const { return c_; }

  /// Dense coordinates (ε_1..ε_n).
  std::vector<int> dense(int n) const {
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < c_.size() && i < static_cast<std::size_t>(n); ++i) out[i] = c_[i];
    return out;
  }

  Weight& operator+=(const Weight& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (int& v : a.c_) v = -v;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

  /// "2e1+e3-e4"; the zero weight prints as "0".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      int v = c_[i];
      if (v == 0) continue;
      if (v < 0) os << '-';
      else if (!first) os << '+';
      if (v != 1 && v != -1) os << (v < 0 ? -v : v);
      os << 'e' << (i + 1);
      first = false;
    }
    return first ? "0" : os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : w.coords()) h = (h ^ static_cast<std::size_t>(v + 0x1000)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace superw
