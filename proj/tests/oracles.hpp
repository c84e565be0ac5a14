#pragma once

// Brute-force reference computations used only by the tests.

#include <functional>
#include <map>
#include <vector>

#include "superw/combinatorics.hpp"

namespace oracle {

using Monomial = std::vector<int>;  // exponent vector
using Poly = std::map<Monomial, long long>;

/// Calls f with the content vector of every semistandard tableau of the given shape with entries ≤ n.
inline void for_each_ssyt(const superw::Partition& shape, int n, const std::function<void(const Monomial&)>& f) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.row(r); ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(shape.length());
  for (int r = 0; r < shape.length(); ++r) t[r].assign(shape.row(r), 0);
  Monomial content(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      f(content);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      ++content[v - 1];
      rec(k + 1);
      --content[v - 1];
    }
    t[r][c] = 0;
  };
  rec(0);
}

inline Poly schur_poly(const superw::Partition& lam, int n) {
  Poly p;
  for_each_ssyt(lam, n, [&](const Monomial& m) { ++p[m]; });
  return p;
}

inline long long count_ssyt(const superw::Partition& lam, int n) {
  long long k = 0;
  for_each_ssyt(lam, n, [&](const Monomial&) { ++k; });
  return k;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Expands a symmetric polynomial in Schur polynomials by peeling off lexicographically leading terms.
inline std::map<superw::Partition, long long> schur_expand(Poly p, int n) {
  std::map<superw::Partition, long long> out;
  while (!p.empty()) {
    const auto& [lead, c] = *p.rbegin();
    std::vector<int> parts;
    for (int e : lead)
      if (e > 0) parts.push_back(e);
    superw::Partition nu(parts);
    long long coeff = c;
    out[nu] += coeff;
    for (const auto& [m, d] : schur_poly(nu, n)) {
      p[m] -= coeff * d;
      if (p[m] == 0) p.erase(m);
    }
  }
  return out;
}

}  // namespace oracle
