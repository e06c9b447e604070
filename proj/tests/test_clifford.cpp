#include <gtest/gtest.h>

#include <set>

#include "lpcusp/clifford.hpp"
#include "support.hpp"

using namespace lpcusp;

namespace {

struct Pair {
  GroupPtr gamma;
  SubgroupHandle n;
};

std::vector<Pair> catalog() {
  std::vector<Pair> out;
  auto s4 = FiniteGroup::symmetric(4);
  auto a4 = FiniteGroup::alternating(4);
  // A4 inside S4, generated by the elements of order 3
  std::vector<int> even;
  for (int g = 0; g < 24; ++g)
    if (s4->element_order(g) != 2 && s4->element_order(g) != 4) even.push_back(g);
  out.push_back({s4, generated_subgroup(s4, even)});
  out.push_back({a4, center(a4)});
  auto q = FiniteGroup::quaternion();
  out.push_back({q, center(q)});
  out.push_back({q, generated_subgroup(q, {q->generators()[0]})});
  for (int n : {4, 5, 6}) {
    auto d = FiniteGroup::dihedral(n);
    int rot = -1;
    for (int g = 0; g < static_cast<int>(d->order()); ++g)
      if (d->element_order(g) == n) rot = g;
    out.push_back({d, generated_subgroup(d, {rot})});
    out.push_back({d, center(d)});
  }
  auto c = direct_product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(2));
  out.push_back({c, generated_subgroup(c, {1})});
  return out;
}

}  // namespace

TEST(Clifford, BijectionCountsAndDimensions) {
  for (const auto& [gamma, n] : catalog()) {
    ASSERT_TRUE(n.normal) << gamma->name();
    auto rep = clifford_bijection(gamma, n, std::nullopt);
    EXPECT_EQ(rep.matches.size(), rep.targets.size()) << gamma->name();
    EXPECT_EQ(rep.targets.size(), character_table(gamma).size()) << gamma->name();
    std::set<int> hit;
    std::size_t sq = 0;
    auto np = NormalPair::make(gamma, n);
    for (const auto& m : rep.matches) {
      hit.insert(m.target);
      EXPECT_EQ(rep.targets[static_cast<std::size_t>(m.target)].dim, m.dim);
      auto deg = std::stoul(np.n_characters()[static_cast<std::size_t>(m.orbit.front())].degree().to_string());
      EXPECT_EQ(m.dim % (m.orbit.size() * deg), 0u);
      sq += m.dim * m.dim;
    }
    EXPECT_EQ(hit.size(), rep.targets.size());
    EXPECT_EQ(sq, gamma->order());
  }
}

TEST(Clifford, RestrictionMultiplicity) {
  // <Res_N V, pi> = dim V / (|orbit| deg pi)
  for (const auto& [gamma, n] : catalog()) {
    auto rep = clifford_bijection(gamma, n, std::nullopt);
    auto np = NormalPair::make(gamma, n);
    for (const auto& m : rep.matches) {
      const auto& v = rep.targets[static_cast<std::size_t>(m.target)];
      const auto& pi = np.n_characters()[static_cast<std::size_t>(m.orbit.front())];
      Cyclotomic s(0);
      for (std::size_t i = 0; i < n.elements.size(); ++i)
        s += v.traces[static_cast<std::size_t>(n.elements[i])] * pi.at(static_cast<int>(i)).conj();
      s /= Cyclotomic(static_cast<long>(n.order()));
      auto deg = pi.degree();
      EXPECT_EQ(s * deg * Cyclotomic(static_cast<long>(m.orbit.size())), Cyclotomic(static_cast<long>(m.dim))) << gamma->name();
    }
  }
}

TEST(Clifford, QuaternionCentreHasNontrivialKappa) {
  auto q = FiniteGroup::quaternion();
  auto np = NormalPair::make(q, center(q));
  int sign = -1;
  for (int i = 0; i < 2; ++i)
    if (!np.n_characters()[static_cast<std::size_t>(i)].values.back().is_one()) sign = i;
  ASSERT_GE(sign, 0);
  auto d = intertwiner_cocycle(np, sign);
  EXPECT_EQ(d.quotient->order(), 4u);
  EXPECT_FALSE(cohomologous(d.kappa, TwoCocycle::trivial(d.quotient)));
  auto alt = intertwiner_cocycle(np, sign, CliffordOptions{{}, true});
  EXPECT_TRUE(cohomologous(d.kappa, alt.kappa));

  auto qr = quotient(q, center(q));
  auto taus = twisted_irreps(d.kappa);
  ASSERT_EQ(taus.size(), 1u);
  auto v = cross_product_rep(taus[0], d, TwoCocycle::trivial(qr.group), qr);
  EXPECT_EQ(v.dim, 2u);
  EXPECT_TRUE(v.verify());
}

TEST(Clifford, TwistedTargetOverElementaryAbelian) {
  // Gamma = (Z/2)^3, N = <e3>, natural = the nontrivial Klein class on Gamma/N
  auto g = FiniteGroup::elementary_abelian2(3);
  auto n = generated_subgroup(g, {4});
  auto qr = quotient(g, n);
  auto k = lpcusp::testing::klein_nontrivial();
  auto iso = find_isomorphism(*qr.group, *k.group());
  ASSERT_TRUE(iso);
  auto natural = pullback(k, make_hom(qr.group, k.group(), *iso));
  auto rep = clifford_bijection(g, n, natural);
  ASSERT_EQ(rep.targets.size(), 2u);
  for (const auto& t : rep.targets) EXPECT_EQ(t.dim, 2u);
  EXPECT_EQ(rep.matches.size(), 2u);
}
