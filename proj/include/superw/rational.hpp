#pragma once

// Exact rational scalars and the error types shared across the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superw {

using Rational = mpq_class;

/// Requested construction needs a larger rank than was supplied.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A condition that the mathematics guarantees failed to hold; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A closure or certificate computation ran out of its step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline int sign_of_power(int exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace superw
