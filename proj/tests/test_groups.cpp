#include <gtest/gtest.h>

#include <numeric>

#include "lpcusp/error.hpp"
#include "lpcusp/groups.hpp"

using namespace lpcusp;

namespace {

long partitions_oracle(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

void expect_group_axioms(const FiniteGroup& g) {
  auto n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(0, a), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), 0);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; c += 3) EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
  std::size_t total = 0;
  for (const auto& c : g.classes()) total += c.size();
  EXPECT_EQ(total, g.order());
}

}  // namespace

TEST(Groups, SymmetricGroupOrdersAndClasses) {
  long fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    auto g = FiniteGroup::symmetric(n);
    EXPECT_EQ(static_cast<long>(g->order()), fact);
    EXPECT_EQ(static_cast<long>(g->classes().size()), partitions_oracle(n));
    expect_group_axioms(*g);
  }
}

TEST(Groups, DihedralClassCount) {
  for (int n = 3; n <= 12; ++n) {
    auto g = FiniteGroup::dihedral(n);
    EXPECT_EQ(g->order(), static_cast<std::size_t>(2 * n));
    std::size_t expect = n % 2 ? static_cast<std::size_t>((n + 3) / 2) : static_cast<std::size_t>((n + 6) / 2);
    EXPECT_EQ(g->classes().size(), expect) << n;
  }
}

TEST(Groups, QuaternionGroup) {
  auto q = FiniteGroup::quaternion();
  EXPECT_EQ(q->order(), 8u);
  EXPECT_EQ(q->classes().size(), 5u);
  EXPECT_EQ(center(q).order(), 2u);
  auto qr = quotient(q, center(q));
  EXPECT_EQ(qr.group->order(), 4u);
  EXPECT_TRUE(qr.group->is_abelian());
  for (std::size_t g = 0; g < 4; ++g) EXPECT_LE(qr.group->element_order(static_cast<int>(g)), 2);
  expect_group_axioms(*q);
}

TEST(Groups, PermutationConvention) {
  // (p*q)(i) = q(p(i))
  auto g = FiniteGroup::from_perms({{1, 0, 2}, {0, 2, 1}});
  ASSERT_EQ(g->order(), 6u);
  Perm p{1, 0, 2}, q{0, 2, 1}, pq(3);
  for (int i = 0; i < 3; ++i) pq[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
  auto ip = g->find_perm(p), iq = g->find_perm(q), ipq = g->find_perm(pq);
  ASSERT_TRUE(ip && iq && ipq);
  EXPECT_EQ(g->mul(*ip, *iq), *ipq);
}

TEST(Groups, CentralExtensionOrder) {
  auto v = FiniteGroup::elementary_abelian2(2);
  std::vector<int> zero(16, 0);
  auto e = central_extension(v, zero, 2);
  EXPECT_EQ(e.group->order(), 8u);
  EXPECT_TRUE(e.group->is_abelian());
}

TEST(Groups, DirectProductAndHom) {
  auto a = FiniteGroup::cyclic(3), b = FiniteGroup::cyclic(4);
  auto p = direct_product(a, b);
  EXPECT_EQ(p->order(), 12u);
  EXPECT_TRUE(are_isomorphic(*p, *FiniteGroup::cyclic(12)));
  std::vector<int> img(12);
  for (int g = 0; g < 12; ++g) img[static_cast<std::size_t>(g)] = g % 4;  // element g*4+h -> h
  auto f = make_hom(p, b, img);
  EXPECT_EQ(f.kernel().size(), 3u);
}

TEST(Groups, NormalityAndSubgroups) {
  auto s4 = FiniteGroup::symmetric(4);
  auto a4 = FiniteGroup::alternating(4);
  EXPECT_EQ(a4->order(), 12u);
  EXPECT_EQ(a4->classes().size(), 4u);
  auto c = center(s4);
  EXPECT_EQ(c.order(), 1u);
  for (int g = 0; g < static_cast<int>(s4->order()); ++g) {
    auto cz = centralizer(s4, g);
    // |class| * |centralizer| = |G|
    EXPECT_EQ(s4->classes()[static_cast<std::size_t>(s4->class_of(g))].size() * cz.order(), s4->order());
  }
  auto h = generated_subgroup(s4, {1});
  EXPECT_EQ(24 % h.order(), 0u);
  EXPECT_THROW(make_subgroup(s4, {0, 99}), ValidationError);
}

TEST(Groups, TableRoundTrip) {
  auto d = FiniteGroup::dihedral(5);
  std::vector<std::vector<int>> t(d->order(), std::vector<int>(d->order()));
  for (std::size_t a = 0; a < d->order(); ++a)
    for (std::size_t b = 0; b < d->order(); ++b) t[a][b] = d->mul(static_cast<int>(a), static_cast<int>(b));
  auto g = FiniteGroup::from_table(t);
  EXPECT_TRUE(are_isomorphic(*g, *d));
  t[1][1] = 1;
  EXPECT_THROW(FiniteGroup::from_table(t), ValidationError);
}
