#include <gtest/gtest.h>

#include "superw/glconstruct.hpp"

using namespace superw;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Partition> partitions_up_to(int k) {
  std::vector<Partition> out;
  for (int s = 0; s <= k; ++s)
    for (auto& p : partitions_of(s)) out.push_back(p);
  return out;
}

/// Weyl dimension formula for the gl(n) simple module whose highest weight has the given coordinates
/// sorted decreasingly.
long long weyl_dim(std::vector<int> nu) {
  std::sort(nu.rbegin(), nu.rend());
  Rational d = 1;
  int n = static_cast<int>(nu.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational f(nu[i] - nu[j] + j - i, j - i);
      f.canonicalize();
      d *= f;
    }
  return d.get_num().get_si();
}

}  // namespace

TEST(GlConstruct, NaturalAndConatural) {
  auto v = natural(3);
  EXPECT_EQ(v->act(WElement::unit(3, 1, 2), SparseVec::unit(1)), SparseVec::unit(0));
  auto w = conatural(3);
  EXPECT_EQ(w->act(WElement::unit(3, 1, 2), SparseVec::unit(0)), SparseVec::unit(1, -1));
  Character expected;
  expected.dims[{Weight::epsilon(1), 1, 1}] = 1;
  expected.dims[{Weight::epsilon(2), 1, 1}] = 1;
  EXPECT_EQ(character(*natural(2)), expected);
  EXPECT_THROW(v->column(Term{0, 1}, 0), std::invalid_argument);
}

TEST(GlConstruct, MixedTensors) {
  EXPECT_EQ(mixed_tensor(1, 1, 3)->dim(), 9u);
  auto d = decompose(*mixed_tensor(2, 0, 2), {OrderKind::natural, 2, Extension::zero});
  EXPECT_EQ(d, (std::map<Weight, long long>{{Weight::epsilon(1, 2), 1}, {Weight::epsilon(1) + Weight::epsilon(2), 1}}));
  // invariants of V⊗V* at n=2: Σ ξ_i⊗∂_i
  auto m = mixed_tensor(1, 1, 2);
  auto inv = grade_kernel(*m, {Weight{}, 0, 0}, component_terms(2, 0));
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(inv[0].nnz(), 2u);
  EXPECT_EQ(inv[0].entries()[0].second, inv[0].entries()[1].second);
  EXPECT_THROW(mixed_tensor(0, 0, 3), std::invalid_argument);
}

TEST(GlConstruct, SimpleModules) {
  EXPECT_EQ(gl_simple(P({1}), P({1}), 3, OrderKind::natural)->dim(), 8u);
  EXPECT_EQ(gl_simple(P({1}), Partition{}, 4, OrderKind::interleaved)->dim(), 4u);
  auto s2 = gl_simple(Partition{}, P({2}), 3, OrderKind::natural);
  EXPECT_EQ(s2->dim(), 6u);
  auto hw = decompose(*s2, {OrderKind::natural, 3, Extension::zero});
  EXPECT_EQ(hw, (std::map<Weight, long long>{{Weight::epsilon(3, -2), 1}}));
  EXPECT_EQ(gl_simple(Partition{}, Partition{}, 3, OrderKind::natural)->dim(), 1u);
  EXPECT_THROW(gl_simple(P({1, 1}), P({1}), 2, OrderKind::natural), RankError);
}

TEST(GlConstruct, SimpleModulesMatchWeylDimension) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lam : partitions_up_to(2))
      for (const auto& mu : partitions_up_to(2)) {
        if (n < 2 * std::max(lam.length(), mu.length()) || n < lam.length() + mu.length()) continue;
        auto hw = stable_highest_weight(lam, mu, OrderKind::natural, n);
        long long expected = weyl_dim(hw.dense(n));
        auto a = gl_simple(lam, mu, n, OrderKind::natural);
        auto b = gl_simple(lam, mu, n, OrderKind::interleaved);
        EXPECT_EQ(static_cast<long long>(a->dim()), expected) << lam.to_string() << "|" << mu.to_string() << " n=" << n;
        EXPECT_EQ(a->dim(), b->dim());
      }
}

TEST(GlConstruct, Decompose) {
  BorelOrder b3{OrderKind::natural, 3, Extension::zero};
  EXPECT_EQ(decompose(*mixed_tensor(1, 1, 3), b3),
            (std::map<Weight, long long>{{Weight::epsilon(1) - Weight::epsilon(3), 1}, {Weight{}, 1}}));
  EXPECT_EQ(decompose(*natural(3), b3), (std::map<Weight, long long>{{Weight::epsilon(1), 1}}));
  auto s1 = schur_module(P({1}), 2);
  EXPECT_EQ(decompose(*tensor(s1, s1), {OrderKind::natural, 2, Extension::zero}),
            (std::map<Weight, long long>{{Weight::epsilon(1, 2), 1}, {Weight::epsilon(1) + Weight::epsilon(2), 1}}));
}

TEST(GlConstruct, DecompositionAccountsForDimension) {
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; p + q <= 3; ++q) {
        if (p + q == 0) continue;
        long long total = 0;
        for (const auto& [w, mult] : decompose(*mixed_tensor(p, q, n), {OrderKind::natural, n, Extension::zero}))
          total += mult * weyl_dim(w.dense(n));
        long long expected = 1;
        for (int k = 0; k < p + q; ++k) expected *= n;
        EXPECT_EQ(total, expected) << "p=" << p << " q=" << q << " n=" << n;
      }
}

TEST(GlConstruct, SchurModules) {
  EXPECT_EQ(schur_module(P({2}), 2)->dim(), 3u);
  EXPECT_EQ(schur_module(P({1, 1}), 2)->dim(), 1u);
  EXPECT_EQ(schur_module(P({2, 1}), 3)->dim(), 8u);
  EXPECT_THROW(schur_module(P({1, 1, 1}), 2), RankError);
  for (const auto& lam : partitions_up_to(4))
    for (int n = std::max(1, lam.length()); n <= 4; ++n)
      EXPECT_EQ(static_cast<long long>(schur_module(lam, n)->dim()), schur_dim(lam, n)) << lam.to_string();
}

TEST(GlConstruct, DominanceAndPairs) {
  BorelOrder prec{OrderKind::interleaved, 4, Extension::zero};
  EXPECT_TRUE(is_dominant(Weight::epsilon(1) - Weight::epsilon(2), prec));
  EXPECT_FALSE(is_dominant(Weight::epsilon(2) - Weight::epsilon(1), prec));
  auto pr = weight_to_pair(Weight({2, 1, 0, 0, -1}), 5);
  ASSERT_TRUE(pr);
  EXPECT_EQ(pr->first, P({2, 1}));
  EXPECT_EQ(pr->second, P({1}));
  EXPECT_FALSE(weight_to_pair(Weight({1, -1, 1}), 3));
}

TEST(GlConstruct, SocleExamples) {
  auto r = verify_socle_identity(P({1}), P({1}), 4);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.layers.size(), 2u);
  ASSERT_EQ(r.layers[1].constituents.size(), 1u);
  EXPECT_TRUE(r.layers[1].constituents[0].lam.empty());
  EXPECT_EQ(r.layers[1].constituents[0].observed, 1);
  auto r2 = verify_socle_identity(P({2}), P({1}), 5);
  EXPECT_TRUE(r2.pass);
  EXPECT_EQ(r2.layers[1].constituents[0].lam, P({1}));
  auto r3 = verify_socle_identity(P({1}), Partition{}, 3);
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(r3.layers.size(), 1u);
  EXPECT_THROW(verify_socle_identity(P({1}), P({1}), 3), RankError);
}

TEST(GlConstruct, SocleIdentitySmallSizes) {
  for (const auto& lam : partitions_up_to(2))
    for (const auto& mu : partitions_up_to(2)) {
      auto r = verify_socle_identity(lam, mu, lam.size() + mu.size() + 2);
      EXPECT_TRUE(r.pass) << lam.to_string() << " | " << mu.to_string();
    }
}
