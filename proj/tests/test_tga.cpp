#include <gtest/gtest.h>

#include <algorithm>

#include "lpcusp/error.hpp"
#include "lpcusp/tga.hpp"
#include "support.hpp"

using namespace lpcusp;
using lpcusp::testing::klein_nontrivial;
using lpcusp::testing::random_roots;

namespace {

/// Cocycle of E -> E/Z from lowest coset representatives, Z central cyclic generated by z.
TwoCocycle section_cocycle(const GroupPtr& e, int z) {
  auto zs = generated_subgroup(e, {z});
  auto qr = quotient(e, zs);
  int m = e->element_order(z);
  auto n = qr.group->order();
  std::vector<int> ex(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int prod = e->mul(qr.coset_reps[a], qr.coset_reps[b]);
      int rep = qr.coset_reps[static_cast<std::size_t>(qr.projection(prod))];
      int diff = e->mul(prod, e->inv(rep));
      int k = 0;
      while (e->pow(z, k) != diff) ++k;
      ex[a * n + b] = k;
    }
  return TwoCocycle::validated(qr.group, m, ex);
}

std::vector<TwoCocycle> sample_cocycles() {
  std::vector<TwoCocycle> out{klein_nontrivial(), TwoCocycle::trivial(FiniteGroup::symmetric(3)),
                              section_cocycle(FiniteGroup::dihedral(8), 0)};
  auto d8 = FiniteGroup::dihedral(8);
  for (int g = 0; g < static_cast<int>(d8->order()); ++g)
    if (center(d8).contains(g) && g != 0) out.push_back(section_cocycle(d8, g));
  auto q = FiniteGroup::quaternion();
  for (int g : center(q).elements)
    if (g != 0) out.push_back(section_cocycle(q, g));
  auto c12 = FiniteGroup::cyclic(12);
  out.push_back(section_cocycle(c12, 4));
  return out;
}

std::vector<std::size_t> dims(const std::vector<TGAIrrep>& v) {
  std::vector<std::size_t> d;
  for (const auto& r : v) d.push_back(r.dim);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(TwistedAlgebra, KleinNontrivialHasOneIrrep) {
  auto irr = twisted_irreps(klein_nontrivial());
  ASSERT_EQ(irr.size(), 1u);
  EXPECT_EQ(irr[0].dim, 2u);
  EXPECT_TRUE(irr[0].verify());
}

TEST(TwistedAlgebra, DimensionsSquaredSumToOrder) {
  for (const auto& c : sample_cocycles()) {
    std::size_t s = 0;
    for (const auto& r : twisted_irreps(c)) {
      s += r.dim * r.dim;
      EXPECT_TRUE(r.verify());
    }
    EXPECT_EQ(s, c.group()->order());
  }
}

TEST(TwistedAlgebra, ProjectiveCharacterOrthogonality) {
  for (const auto& c : sample_cocycles()) {
    auto irr = twisted_irreps(c);
    auto n = static_cast<long>(c.group()->order());
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = 0; j < irr.size(); ++j) {
        Cyclotomic s(0);
        for (long g = 0; g < n; ++g)
          s += irr[i].traces[static_cast<std::size_t>(g)] * irr[j].traces[static_cast<std::size_t>(g)].conj();
        EXPECT_EQ(s, Cyclotomic(i == j ? n : 0));
      }
  }
}

TEST(TwistedAlgebra, CoboundaryTwistKeepsDimensions) {
  std::mt19937 rng(5);
  for (const auto& c : sample_cocycles()) {
    auto base = dims(twisted_irreps(c));
    for (int trial = 0; trial < 4; ++trial) {
      auto beta = random_roots(rng, c.group()->order(), 6);
      auto t = twist_by(c, beta);
      EXPECT_EQ(dims(twisted_irreps(t)), base);
      auto found = cohomologous(t, c);
      ASSERT_TRUE(found);
      // t / c = d(found)
      EXPECT_TRUE(twist_by(c, *found) == t);
    }
  }
}

TEST(TwistedAlgebra, DistinguishesClasses) {
  auto k = klein_nontrivial();
  EXPECT_FALSE(cohomologous(k, TwoCocycle::trivial(k.group())));
  EXPECT_FALSE(k.is_trivial());
  EXPECT_TRUE(cohomologous(k * k, TwoCocycle::trivial(k.group())));
}

TEST(TwistedAlgebra, RejectsNonCocycle) {
  auto g = FiniteGroup::cyclic(3);
  std::vector<int> e(9, 0);
  e[1 * 3 + 1] = 1;  // c(1,1) only: fails at (1,1,1)
  EXPECT_THROW(TwoCocycle::validated(g, 2, e), ValidationError);
}

TEST(TwistedAlgebra, CharacterOnlyModeAgrees) {
  auto c = section_cocycle(FiniteGroup::dihedral(8), 0);
  auto full = twisted_irreps(c);
  auto lean = twisted_irreps(c, 1);
  ASSERT_EQ(full.size(), lean.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    EXPECT_FALSE(lean[i].has_matrices());
    EXPECT_EQ(lean[i].traces, full[i].traces);
  }
}

TEST(TwistedAlgebra, DualLivesOverInverseCocycle) {
  for (const auto& c : sample_cocycles())
    for (const auto& r : twisted_irreps(c)) {
      auto d = dual_twisted(r);
      EXPECT_TRUE(d.cocycle == c.inverse());
      EXPECT_TRUE(d.verify());
    }
}

TEST(TwistedAlgebra, PullbackAlongSurjection) {
  auto k = klein_nontrivial();
  auto v3 = FiniteGroup::elementary_abelian2(3);
  auto iso = find_isomorphism(*FiniteGroup::elementary_abelian2(2), *k.group());
  ASSERT_TRUE(iso);
  std::vector<int> img(8);
  for (int g = 0; g < 8; ++g) img[static_cast<std::size_t>(g)] = (*iso)[static_cast<std::size_t>(g & 3)];
  auto pi = make_hom(v3, k.group(), img);
  auto p = pullback(k, pi);
  auto irr = twisted_irreps(p);
  EXPECT_EQ(dims(irr), (std::vector<std::size_t>{2, 2}));
}
