#pragma once

// The acceptance battery: nine named criteria, each returning pass/fail with a short detail line.

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stabilize.hpp"

namespace superw {

/// A random nonzero element of W(n)^k with small integer coefficients.
inline WElement random_homogeneous(std::mt19937_64& rng, int n, int k) {
  auto basis = component_terms(n, k);
  std::uniform_int_distribution<int> coeff(-3, 3);
  WElement x(n);
  while (x.is_zero())
    for (const auto& t : basis)
      if (rng() % 4 == 0) x.add(t, coeff(rng));
  return x;
}

struct PropertyResult {
  std::string name{};
  bool pass = true;
  std::size_t trials = 0;
  std::string counterexample{};
};

/// Jacobi, Leibniz and representation checks on random samples; deterministic in the seed.
inline std::vector<PropertyResult> check_algebra(int n, std::size_t samples, std::uint64_t seed,
                                                 BracketSign mode = BracketSign::correct) {
  std::mt19937_64 rng(seed);
  auto degree = [&](int hi) { return static_cast<int>(rng() % static_cast<unsigned>(hi + 2)) - 1; };
  std::vector<PropertyResult> out;

  PropertyResult jac{"jacobi"};
  BracketFn br = [mode](const WElement& a, const WElement& b) { return bracket(a, b, mode); };
  for (std::size_t s = 0; s < samples && jac.pass; ++s, ++jac.trials) {
    auto x = random_homogeneous(rng, n, degree(std::min(1, n - 1)));
    auto y = random_homogeneous(rng, n, degree(std::min(1, n - 1)));
    auto z = random_homogeneous(rng, n, degree(std::min(2, n - 1)));
    if (auto d = jacobi_defect(br, x, y, z); !d.is_zero()) {
      jac.pass = false;
      jac.counterexample = "x = " + x.to_string() + "; y = " + y.to_string() + "; z = " + z.to_string() +
                           "; defect = " + d.to_string();
    }
  }
  out.push_back(jac);

  PropertyResult leib{"leibniz"};
  auto terms = all_terms(n);
  std::uniform_int_distribution<Mask> mono(0, (Mask{1} << n) - 1);
  for (std::size_t s = 0; s < samples && leib.pass; ++s, ++leib.trials) {
    WElement d(n);
    d.add(terms[rng() % terms.size()], 1);
    auto f = GrassmannElement::monomial(mono(rng));
    auto g = GrassmannElement::monomial(mono(rng));
    auto lhs = d.apply(gmul(f, g));
    auto rhs = gmul(d.apply(f), g) + Rational(sign_of_power(parity(d) * f.homogeneous_parity())) * gmul(f, d.apply(g));
    if (lhs != rhs) {
      leib.pass = false;
      leib.counterexample = "D = " + d.to_string() + "; f = " + f.to_string() + "; g = " + g.to_string();
    }
  }
  out.push_back(leib);

  PropertyResult rep{"representation"};
  auto ext = exterior_module(n);
  auto adj = adjoint_module(n);
  for (std::size_t s = 0; s < samples && rep.pass; ++s, ++rep.trials) {
    const Term& x = terms[rng() % terms.size()];
    const Term& y = terms[rng() % terms.size()];
    for (const auto& m : {ext, adj})
      if (auto d = representation_defect(*m, x, y); !d.empty()) {
        rep.pass = false;
        rep.counterexample = m->name() + ": " + d;
        break;
      }
  }
  out.push_back(rep);
  return out;
}

struct CriterionResult {
  int id = 0;
  std::string name{};
  bool pass = false;
  std::string detail{};
  double seconds = 0;
};

namespace detail {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

inline std::vector<Partition> partitions_up_to(int k) {
  std::vector<Partition> out;
  for (int s = 0; s <= k; ++s)
    for (auto& p : partitions_of(s)) out.push_back(p);
  return out;
}

inline std::string pair_text(const Partition& lam, const Partition& mu) {
  return "(" + lam.to_string() + "|" + mu.to_string() + ")";
}

/// Collects failure messages; the criterion passes when none were recorded.
struct Failures {
  std::vector<std::string> items;
  void add(std::string s) { items.push_back(std::move(s)); }
  bool empty() const { return items.empty(); }
  std::string summary(const std::string& ok) const {
    if (items.empty()) return ok;
    std::string s = items.front();
    if (items.size() > 1) s += " (+" + std::to_string(items.size() - 1) + " more)";
    return s;
  }
};

}  // namespace detail

inline CriterionResult criterion_algebra(BracketSign mode = BracketSign::correct) {
  CriterionResult r{1, "algebra correctness"};
  detail::Failures fail;
  auto props = check_algebra(4, 1000, 1, mode);
  if (!props[0].pass) fail.add("jacobi: " + props[0].counterexample);
  for (int n = 1; n <= 6; ++n)
    for (int k = -1; k <= n - 1; ++k)
      if (static_cast<long long>(component_terms(n, k).size()) != detail::binomial(n, k + 1) * n)
        fail.add("dim W(" + std::to_string(n) + ")^" + std::to_string(k));
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            WElement expected(n);
            if (j == k) expected += WElement::unit(n, i, l);
            if (l == i) expected -= WElement::unit(n, k, j);
            if (bracket(WElement::unit(n, i, j), WElement::unit(n, k, l), mode) != expected)
              fail.add("gl(" + std::to_string(n) + ") bracket [E" + std::to_string(i) + std::to_string(j) + ", E" +
                       std::to_string(k) + std::to_string(l) + "]");
          }
  r.pass = fail.empty();
  r.detail = fail.summary("1000 Jacobi triples in W(4), component dimensions n <= 6, gl(n) brackets n <= 4");
  return r;
}

inline CriterionResult criterion_socle() {
  CriterionResult r{2, "socle multiplicities"};
  detail::Failures fail;
  int count = 0;
  for (const auto& lam : detail::partitions_up_to(3))
    for (const auto& mu : detail::partitions_up_to(3)) {
      auto rep = verify_socle_identity(lam, mu, lam.size() + mu.size() + 2);
      ++count;
      if (!rep.pass) fail.add("mismatch for " + detail::pair_text(lam, mu));
    }
  r.pass = fail.empty();
  r.detail = fail.summary(std::to_string(count) + " pairs agree");
  return r;
}

inline CriterionResult criterion_kac_plus() {
  CriterionResult r{3, "K+ simplicity dichotomy"};
  detail::Failures fail;
  const int n = 4;
  int count = 0;
  for (const auto& lam : detail::partitions_up_to(2))
    for (const auto& mu : detail::partitions_up_to(2)) {
      bool exceptional = lam.empty() && mu.length() <= 1;
      auto res = is_simple(kac_plus(gl_simple(lam, mu, n, OrderKind::natural), n));
      ++count;
      if (res.verdict != (exceptional ? Verdict::not_simple : Verdict::simple))
        fail.add(detail::pair_text(lam, mu) + " is " + to_string(res.verdict) + ": " + res.reason);
    }
  // the weight vector ∂2⊗∂2^k in the interleaved realization
  for (int k = 1; k <= 2; ++k) {
    auto x = gl_simple(Partition{}, Partition({k}), n, OrderKind::interleaved);
    auto m = kac_plus(x, n);
    SparseVec v = SparseVec::unit(bit(2) * x->dim());
    bool singular = true;
    for (const Term& t : usable_raising_terms(*m, {OrderKind::interleaved, n, Extension::max}))
      singular = singular && m->act(t, v).is_zero();
    auto sub = closure(m, {v});
    if (!singular) fail.add("d2⊗hw is not primitive for k = " + std::to_string(k));
    if (sub->dim() >= m->dim()) fail.add("d2⊗hw generates everything for k = " + std::to_string(k));
  }
  r.pass = fail.empty();
  r.detail = fail.summary(std::to_string(count) + " verdicts match; d2⊗d2^k primitive and proper for k = 1, 2");
  return r;
}

inline CriterionResult criterion_kac_minus() {
  CriterionResult r{4, "K- degree-one primitive"};
  detail::Failures fail;
  const int n = 4;
  const WElement x = parse_welement("x1^x3 d2", n);
  int count = 0;
  for (const auto& lam : detail::partitions_up_to(2))
    for (const auto& mu : detail::partitions_up_to(2)) {
      auto m = kac_minus_truncated(gl_simple(lam, mu, n, OrderKind::interleaved), n, 2);
      SparseVec v = m->act(x, generator_of(*m));
      ++count;
      if (v.is_zero()) {
        fail.add("x·v vanishes for " + detail::pair_text(lam, mu));
        continue;
      }
      for (const Term& t : usable_raising_terms(*m, {OrderKind::interleaved, n, Extension::min}))
        if (!m->act(t, v).is_zero()) {
          fail.add("x·v not primitive for " + detail::pair_text(lam, mu) + " under " + term_string(t));
          break;
        }
    }
  r.pass = fail.empty();
  r.detail = fail.summary(std::to_string(count) + " pairs: (x1^x3 d2)·v is b^min-primitive in layer 1");
  return r;
}

inline CriterionResult criterion_tensor_field() {
  CriterionResult r{5, "tensor-field realization"};
  detail::Failures fail;
  for (int n = 3; n <= 4; ++n) {
    auto l = extract_L_minus(Partition({1}), Partition{}, n);
    if (l.module->dim() != (std::size_t{1} << n) - 1) fail.add("dim L-((1)|) at n = " + std::to_string(n));
    if (l.highest_weight != Weight::epsilon(1)) fail.add("highest weight of L-((1)|)");
    auto iso = iso_check(l.module, exterior_positive(n));
    if (!iso.isomorphic) fail.add("L-((1)|) vs exterior/C at n = " + std::to_string(n) + ": " + iso.reason);
  }
  for (int n = 2; n <= 3; ++n) {
    auto l = extract_L_minus(Partition{}, Partition({1}), n);
    if (l.module->dim() != static_cast<std::size_t>(n) << n) fail.add("dim L-(|1) at n = " + std::to_string(n));
    if (l.highest_weight != Weight::epsilon(2, -1)) fail.add("highest weight of L-(|1)");
    auto iso = iso_check(l.module, adjoint_module(n));
    if (!iso.isomorphic) fail.add("L-(|1) vs adjoint at n = " + std::to_string(n) + ": " + iso.reason);
  }
  r.pass = fail.empty();
  r.detail = fail.summary("intertwiners with exterior/C (n = 3, 4) and the adjoint module (n = 2, 3)");
  return r;
}

inline CriterionResult criterion_duality() {
  CriterionResult r{6, "coinduction duality"};
  detail::Failures fail;
  const int n = 3;
  for (const auto& x : {trivial_module(n, Scope::gl), natural(n), conatural(n),
                        gl_simple(Partition({1}), Partition({1}), n, OrderKind::interleaved)}) {
    auto c = coinduction_duality_check(x, n);
    if (!c.pass) fail.add(x->name() + ": " + c.iso.reason);
  }
  r.pass = fail.empty();
  r.detail = fail.summary("T(X) ≅ K+(X*)* for trivial, natural, conatural, V_{(1),(1)} at n = 3");
  return r;
}

inline CriterionResult criterion_psi() {
  CriterionResult r{7, "Psi round-trip"};
  detail::Failures fail;
  const int n = 4;
  int count = 0;
  for (const auto& lam : detail::partitions_up_to(2))
    for (const auto& mu : detail::partitions_up_to(2)) {
      auto l = extract_L_minus(lam, mu, n);
      auto iso = iso_check(psi_invariants(l.module), gl_simple(lam, mu, n, OrderKind::interleaved));
      ++count;
      if (!iso.isomorphic) fail.add(detail::pair_text(lam, mu) + ": " + iso.reason);
    }
  r.pass = fail.empty();
  r.detail = fail.summary(std::to_string(count) + " pairs round-trip");
  return r;
}

inline CriterionResult criterion_stabilization() {
  CriterionResult r{8, "stabilization"};
  detail::Failures fail;
  std::vector<std::pair<PartitionPair, Family>> cases{{{Partition({1}), Partition{}}, Family::l_minus},
                                                      {{Partition{}, Partition({1})}, Family::l_minus},
                                                      {{Partition({1}), Partition({1})}, Family::l_minus},
                                                      {{Partition({1}), Partition({1})}, Family::kac_plus}};
  for (const auto& [pr, f] : cases) {
    auto rep = stabilize(pr.first, pr.second, 4, 6, f);
    if (!rep.stabilized) fail.add(to_string(f) + detail::pair_text(pr.first, pr.second) + ": " + rep.detail);
  }
  r.pass = fail.empty();
  r.detail = fail.summary("L-((1)|), L-(|1), L-((1)|(1)), K+((1)|(1)) stable over n = 4..6");
  return r;
}

inline CriterionResult criterion_negative_controls() {
  CriterionResult r{9, "negative controls"};
  detail::Failures fail;
  auto bad = criterion_algebra(BracketSign::flipped);
  if (bad.pass) fail.add("sign-flipped bracket passes criterion 1");
  for (int k = 0; k <= 2; ++k)
    if (typicality(Weight::epsilon(4, -k), 4).typical) fail.add("-" + std::to_string(k) + "e4 reported typical");
  r.pass = fail.empty();
  r.detail = fail.summary("flipped bracket fails criterion 1; -k e4 atypical for k = 0, 1, 2");
  return r;
}

inline const std::vector<std::function<CriterionResult()>>& criteria() {
  static const std::vector<std::function<CriterionResult()>> all{
      [] { return criterion_algebra(); }, criterion_socle,   criterion_kac_plus,
      criterion_kac_minus,               criterion_tensor_field, criterion_duality,
      criterion_psi,                      criterion_stabilization, criterion_negative_controls};
  return all;
}

/// Runs the criteria concurrently; results come back in criterion order.
inline std::vector<CriterionResult> run_suite(bool parallel = true) {
  auto timed = [](const std::function<CriterionResult()>& f) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  std::vector<CriterionResult> out;
  if (!parallel) {
    for (const auto& f : criteria()) out.push_back(timed(f));
  } else {
    std::vector<std::future<CriterionResult>> jobs;
    for (const auto& f : criteria()) jobs.push_back(std::async(std::launch::async, timed, f));
    for (auto& j : jobs) out.push_back(j.get());
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].id == 0) out[i].id = static_cast<int>(i + 1);
  return out;
}

}  // namespace superw
