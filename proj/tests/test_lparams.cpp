#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lpcusp/builtin_cases.hpp"
#include "lpcusp/error.hpp"
#include "lpcusp/lparams.hpp"

using namespace lpcusp;

namespace {

Block block(const std::string& core, int dim, int a, int mult = 1, Duality dual = Duality::None, Rational s = 0) {
  return {{core, dim, dual, core, {s, RootOfUnity()}}, a, mult};
}

LParameter gl(int n, int d, std::vector<Block> blocks) { return {{GroupKindL::GLinner, n, d}, std::move(blocks)}; }

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// |centralizer| of a permutation with the given cycle type.
long z_of(const Partition& mu) {
  std::map<int, int> m;
  for (int x : mu) ++m[x];
  long z = 1;
  for (auto [part, c] : m) {
    for (int i = 0; i < c; ++i) z *= part;
    z *= factorial(c);
  }
  return z;
}

long hook_dimension(const Partition& lambda) {
  long n = total(lambda), prod = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      long arm = lambda[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
      prod *= arm + leg + 1;
    }
  return factorial(static_cast<int>(n)) / prod;
}

}  // namespace

TEST(LParams, ValidationRejectsBadInput) {
  EXPECT_THROW(validate(gl(4, 1, {block("a", 1, 3)})), ValidationError);
  // Sp(2) has dual SO(3): a symplectic label cannot appear with odd multiplicity
  LParameter sp{{GroupKindL::Sp, 2, 1}, {block("s", 1, 3, 1, Duality::Symp)}};
  EXPECT_THROW(validate(sp), ValidationError);
  LParameter twisted{{GroupKindL::Sp, 2, 1}, {block("o", 1, 3, 1, Duality::Orth, 1)}};
  EXPECT_THROW(validate(twisted), ValidationError);
  EXPECT_NO_THROW(validate({{GroupKindL::Sp, 2, 1}, {block("o", 1, 3, 1, Duality::Orth)}}));
}

TEST(LParams, ValidationMergesEqualBlocks) {
  auto v = validate(gl(4, 1, {block("a", 1, 2), block("a", 1, 2)}));
  ASSERT_EQ(v.blocks.size(), 1u);
  EXPECT_EQ(v.blocks[0].mult, 2);
}

TEST(LParams, InnerFormComponentGroupIsCyclic) {
  EXPECT_EQ(s_group(gl(6, 1, {block("a", 1, 2), block("b", 1, 4)})).s_group->order(), 2u);
  EXPECT_EQ(s_group(gl(10, 2, {block("a", 5, 2)})).s_group->order(), 2u);
  EXPECT_EQ(s_group(gl(9, 1, {block("a", 1, 6), block("b", 1, 3)})).s_group->order(), 3u);
}

TEST(LParams, InnerFormCuspidality) {
  // GL_1(D) with D of index 2: chi (x) S_2 with the order-2 character
  auto phi = gl(2, 2, {block("c", 1, 2)});
  EXPECT_TRUE(is_cuspidal({phi, {{}, 1}}));
  EXPECT_FALSE(is_cuspidal({phi, {{}, 0}}));
  EXPECT_TRUE(is_cuspidal({gl(3, 1, {block("c", 3, 1)}), {}}));
  EXPECT_FALSE(is_cuspidal({gl(2, 1, {block("c", 1, 2)}), {}}));
}

TEST(LParams, SymmetricCharactersFromMurnaghanNakayama) {
  for (int k = 1; k <= 6; ++k) {
    auto ps = partitions(k);
    for (const auto& lam : ps) {
      EXPECT_EQ(symmetric_character(lam, Partition(static_cast<std::size_t>(k), 1)), hook_dimension(lam));
      for (const auto& mu : ps) {
        long s = 0;
        for (const auto& c : ps) s += factorial(k) / z_of(c) * symmetric_character(lam, c) * symmetric_character(mu, c);
        EXPECT_EQ(s, lam == mu ? factorial(k) : 0) << to_string(lam) << " " << to_string(mu);
      }
    }
  }
}

TEST(LParams, SupportPreservesInfinitesimalCharacter) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> adist(1, 4), count(1, 3), sd(-3, 3);
    std::vector<Block> blocks;
    int n = 0;
    for (int i = count(rng); i > 0; --i) {
      int a = adist(rng);
      blocks.push_back(block("c", 1, a, 1, Duality::None, frac(sd(rng), 2)));
      n += a;
    }
    auto phi = validate(gl(n, 1, blocks));
    auto t = s_group(phi);
    long j = std::uniform_int_distribution<long>(0, t.cyclic_order - 1)(rng);
    EnhancedParameter p{phi, {{}, j}};
    auto cd = cuspidal_support(p);
    EXPECT_EQ(infinitesimal_multiset(cd.on_levi.phi), infinitesimal_multiset(phi));
    EXPECT_EQ(std::accumulate(cd.levi.begin(), cd.levi.end(), 0), n);
    EXPECT_TRUE(is_cuspidal_datum(cd));
    if (is_cuspidal(p)) EXPECT_EQ(cd.levi.size(), 1u);
  }
}

TEST(LParams, StandardTripleRoundTrip) {
  auto phi = gl(7, 1, {block("a", 1, 2, 1, Duality::None, frac(1, 2)), block("b", 2, 1, 1, Duality::None, -1),
                       block("a", 1, 3)});
  EnhancedParameter p{validate(phi), {}};
  auto st = standard_triple(p);
  EXPECT_EQ(st.levi, (std::vector<int>{2, 3, 2}));
  auto back = assemble(st);
  EXPECT_EQ(infinitesimal_multiset(back.phi), infinitesimal_multiset(p.phi));
  EXPECT_EQ(back.phi.blocks.size(), p.phi.blocks.size());
  for (const auto& f : standard_triple_factors(st)) EXPECT_TRUE(is_bounded(f.phi));
  EXPECT_THROW(standard_triple({{{GroupKindL::Sp, 2, 1}, {block("o", 1, 3, 1, Duality::Orth)}}, {}}), NotSupported);
}

TEST(LParams, GL4ComponentHasFivePoints) {
  auto p = EnhancedParameter{gl(4, 1, {block("c", 1, 1, 4)}), {}};
  auto s = bernstein_component(p);
  EXPECT_EQ(s.w->order(), 24u);
  auto cq = component_extended_quotient(s);
  ASSERT_EQ(cq.points.size(), static_cast<std::size_t>(partition_count(4)));
  for (const auto& pt : cq.points) {
    ASSERT_TRUE(pt.parameter);
    EXPECT_TRUE(is_bounded(pt.parameter->phi));
    EXPECT_EQ(bernstein_component(*pt.parameter), s);
  }
}

TEST(LParams, SymplecticRankOneSupport) {
  // Sp(2) = SL(2): the regular orbit of SO(3) with trivial enhancement has support on the torus
  EnhancedParameter p{{{GroupKindL::Sp, 2, 1}, {block("o", 1, 3, 1, Duality::Orth)}}, {}};
  EXPECT_FALSE(is_cuspidal(p));
  auto cd = cuspidal_support(p);
  ASSERT_EQ(cd.levi, std::vector<int>{1});
  EXPECT_EQ(cd.tail_n, 1);
  EXPECT_EQ(cd.on_levi.phi.blocks.front().label.twist.s, Rational(1));
  EXPECT_EQ(inertial_class(cd).w->order(), 2u);
}

TEST(LParams, UnitaryAlternatingSigns) {
  LParameter phi{{GroupKindL::U, 4, 1}, {block("o", 1, 1, 1, Duality::ConjOrth), block("o", 1, 3, 1, Duality::ConjOrth)}};
  Enhancement alt, same;
  alt.signs[{"o", 3}] = -1;
  EXPECT_TRUE(is_cuspidal({phi, alt}));
  EXPECT_FALSE(is_cuspidal({phi, same}));
}

TEST(LParams, BuiltinCasesPass) {
  for (const auto& name : builtin_case_names()) EXPECT_TRUE(run_builtin_case(name).pass) << name;
}
