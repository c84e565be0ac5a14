#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace superw {

/// Linear order on {1..n} that fixes a Borel subalgebra of gl(n).
enum class OrderKind {
  natural,      ///< 1 < 2 < ... < n
  interleaved,  ///< 1, 3, 5, ..., then the even indices descending (... 6, 4, 2)
};

/// How the gl(n) Borel is extended to W(n).
enum class Extension {
  zero,  ///< gl(n) part only
  min,   ///< adjoin g^{-1}
  max,   ///< adjoin every component of positive degree
};

struct BorelOrder {
  OrderKind kind = OrderKind::natural;
  int rank = 0;
  Extension extension = Extension::zero;

  /// Indices listed from first to last in the order.
  std::vector<int> sequence() const {
    std::vector<int> seq;
    seq.reserve(rank);
    if (kind == OrderKind::natural) {
      for (int i = 1; i <= rank; ++i) seq.push_back(i);
    } else {
      for (int i = 1; i <= rank; i += 2) seq.push_back(i);
      for (int i = rank - (rank % 2); i >= 2; i -= 2) seq.push_back(i);
    }
    return seq;
  }

  /// position[i] = place of index i in sequence(); entry 0 unused.
  std::vector<int> positions() const {
    std::vector<int> pos(rank + 1, -1);
    auto seq = sequence();
    for (int p = 0; p < rank; ++p) pos[seq[p]] = p;
    return pos;
  }

  BorelOrder with(Extension e) const { return BorelOrder{kind, rank, e}; }
};

inline std::string to_string(OrderKind k) { return k == OrderKind::natural ? "natural" : "interleaved"; }

inline std::string to_string(Extension e) {
  switch (e) {
    case Extension::zero: return "zero";
    case Extension::min: return "min";
    case Extension::max: return "max";
  }
  return "?";
}

inline OrderKind parse_order_kind(const std::string& s) {
  if (s == "natural" || s == "<") return OrderKind::natural;
  if (s == "interleaved" || s == "prec") return OrderKind::interleaved;
  throw std::invalid_argument("unknown order: " + s);
}

}  // namespace superw
