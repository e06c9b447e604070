// Acceptance suite: one PASS/FAIL line per criterion, each against an independent oracle and a time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lpcusp/builtin_cases.hpp"
#include "lpcusp/clifford.hpp"
#include "lpcusp/error.hpp"
#include "lpcusp/extquot.hpp"
#include "lpcusp/lparams.hpp"
#include "lpcusp/springer.hpp"
#include "support.hpp"

using namespace lpcusp;
using namespace lpcusp::testing;

namespace {

/// Collects failure notes for one criterion; pass iff none were recorded.
struct Check {
  std::vector<std::string> notes;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (notes.size() < 5) notes.push_back(what);
    else if (notes.size() == 5) notes.push_back("...");
  }
};

int run_criterion(int id, const std::string& name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) c.notes.push_back("over time limit");
  bool pass = c.notes.empty();
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  time=" << std::fixed;
  line.precision(3);
  line << secs << "s limit=" << limit_s << "s  " << c.summary;
  for (const auto& n : c.notes) line << " | " << n;
  std::cout << line.str() << std::endl;
  return pass ? 0 : 1;
}

long euler_phi(long n) {
  long r = 0;
  for (long k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
  return r;
}

/// Irreducible K[G, c]-modules are counted by c-regular classes: g with c(g,h) = c(h,g) on C_G(g).
std::size_t regular_class_count(const TwoCocycle& c) {
  const auto& g = *c.group();
  std::size_t count = 0;
  for (const auto& cls : g.classes()) {
    int x = cls.front();
    bool regular = true;
    for (int h = 0; h < static_cast<int>(g.order()) && regular; ++h)
      if (g.mul(x, h) == g.mul(h, x)) regular = c(x, h) == c(h, x);
    count += regular;
  }
  return count;
}

// ---------------------------------------------------------------------------------------------
// 1. Example A

void example_a(Check& c) {
  auto g = example_a_group();
  c.expect(g->order() == 8 && g->classes().size() == 5, "A_G(u) should have order 8 with 5 classes");
  auto sd = example_a_section();
  auto sc = cocycle_from_section(sd);
  auto w = sc.quotient.group;
  bool klein = w->order() == 4;
  for (std::size_t x = 0; x < w->order(); ++x) klein = klein && w->element_order(static_cast<int>(x)) <= 2;
  c.expect(klein, "quotient is not the Klein four-group");
  c.expect(!cohomologous(sc.natural, TwoCocycle::trivial(w)), "section cocycle is a coboundary");

  // Intertwiner cocycle of eps, computed directly on the ambient group.
  auto np = NormalPair::make(sd.ambient, sd.normal);
  auto d = intertwiner_cocycle(np, irrep_index_of(np, sd.eps));
  auto natural_here = pullback(sc.natural, quotient_inclusion(d, sc.quotient));
  c.expect(!cohomologous(d.kappa, TwoCocycle::trivial(d.quotient)), "kappa is a coboundary");
  bool inv = cohomologous(d.kappa, natural_here.inverse()).has_value();
  c.expect(inv, "kappa is not cohomologous to the inverse section cocycle");
  auto check = compare_section_cocycles(sd);
  c.expect(check.matches_inverse == inv, "library comparison disagrees with the direct route");

  auto irr = twisted_irreps(sc.natural);
  c.expect(irr.size() == 1 && irr[0].dim == 2 && irr[0].verify(), "K[W, natural] should have one module of dim 2");
  c.expect(regular_class_count(sc.natural) == irr.size(), "regular class count differs from the module count");

  // The same on Q8 itself, with N = {+-1} and eps the sign character.
  auto zq = center(g);
  c.expect(zq.order() == 2, "Q8 should have centre {+-1}");
  auto npq = NormalPair::make(g, zq);
  int sign = -1;
  for (int i = 0; i < 2; ++i)
    if (!npq.n_characters()[static_cast<std::size_t>(i)].values.back().is_one()) sign = i;
  auto dq = intertwiner_cocycle(npq, sign);
  c.expect(!cohomologous(dq.kappa, TwoCocycle::trivial(dq.quotient)), "kappa_eps on Q8 is a coboundary");
  auto iso = find_isomorphism(*dq.quotient, *w);
  c.expect(iso.has_value(), "Q8/{+-1} is not isomorphic to W");
  if (iso) {
    auto transported = pullback(sc.natural, make_hom(dq.quotient, w, *iso));
    c.expect(cohomologous(dq.kappa, transported.inverse()).has_value(), "kappa_eps on Q8 is not cohomologous to natural^-1");
  }
  auto rep = clifford_bijection(g, zq, std::nullopt);
  std::size_t over_eps = 0;
  for (const auto& m : rep.matches)
    if (m.orbit.front() == sign) {
      ++over_eps;
      c.expect(m.dim == 2, "irrep of Q8 over eps should have dim 2");
    }
  c.expect(over_eps == 1, "expected exactly one irrep of Q8 over eps");
  c.expect(run_builtin_case("A").pass, "built-in case A failed");
  c.summary = "|A|=8, W=Klein, kappa~natural^-1, one 2-dim module";
}

// ---------------------------------------------------------------------------------------------
// 2. Example B

void example_b(Check& c) {
  auto cq = component_extended_quotient(example_a_section(), "SL_5(D)");
  const auto& w = cq.datum.gamma;
  c.expect(w->order() == 4 && w->is_abelian(), "W_s should be Klein");
  c.expect(!cq.cocycle_trivial, "cocycle should be nontrivial");
  std::size_t expected = 0;
  for (const auto& orbit : cq.quotient.x_orbits)
    expected += regular_class_count(cq.datum.kappa[static_cast<std::size_t>(orbit.front())]);
  c.expect(cq.quotient.points.size() == expected, "points differ from the regular class count " + std::to_string(expected));
  c.expect(cq.quotient.points.size() == 1 && cq.quotient.points[0].dim == 2, "expected a single point of dim 2");
  c.summary = "points=" + std::to_string(cq.quotient.points.size()) + " (regular classes " + std::to_string(expected) + ")";
}


// ---------------------------------------------------------------------------------------------
// 3. Census: sum_u |Irr A(u)| against sum over cuspidal supports of |Irr W_t|

/// |A(u)| from the Jordan type alone: 2^(distinct even parts) for Sp, 2^(distinct odd parts - 1) for SO_odd.
long component_order_oracle(ClassicalType t, const Partition& lambda) {
  std::set<int> parts(lambda.begin(), lambda.end());
  int even = 0, odd = 0;
  for (int a : parts) (a % 2 ? odd : even) += 1;
  if (t == ClassicalType::Sp) return 1L << even;
  return 1L << std::max(odd - 1, 0);
}

/// Cuspidal tails: Sp_{d(d+1)} and SO_{j^2}, j odd; one cuspidal pair each.
long rhs_oracle(ClassicalType t, int n) {
  if (t == ClassicalType::GL) return partition_count(n);
  long s = 0;
  for (int tail = t == ClassicalType::Sp ? 0 : 1; tail <= n; ++tail) {
    bool cusp = false;
    for (int d = 0; d * d <= 4 * n + 4; ++d)
      cusp = cusp || (t == ClassicalType::Sp ? d * (d + 1) == tail : (d % 2 == 1 && d * d == tail));
    if (cusp && (n - tail) % 2 == 0) s += bipartition_count((n - tail) / 2);
  }
  return s;
}

void census_criterion(Check& c) {
  int rows = 0;
  auto run = [&](ClassicalType t, int lo, int hi, int step) {
    for (int n = lo; n <= hi; n += step, ++rows) {
      auto r = census(t, n);
      std::string where = to_string(t) + " n=" + std::to_string(n);
      c.expect(r.ok(), where + ": lhs " + std::to_string(r.lhs) + " != rhs " + std::to_string(r.rhs));
      c.expect(r.rhs == rhs_oracle(t, n), where + ": rhs " + std::to_string(r.rhs) + " != oracle " + std::to_string(rhs_oracle(t, n)));
      if (t == ClassicalType::GL) {
        c.expect(r.lhs == partition_count(n), where + ": lhs is not p(n)");
        continue;
      }
      std::map<std::string, long> oracle;
      for (const auto& lam : partitions(n)) {
        std::map<int, int> mult;
        for (int a : lam) ++mult[a];
        bool ok = true;
        for (auto [a, m] : mult)
          if (a % 2 == (t == ClassicalType::Sp ? 1 : 0) && m % 2) ok = false;
        if (ok) oracle[to_string(lam)] = component_order_oracle(t, lam);
      }
      c.expect(r.lhs_terms.size() == oracle.size(), where + ": class count " + std::to_string(r.lhs_terms.size()) +
                                                        " != brute force " + std::to_string(oracle.size()));
      for (const auto& term : r.lhs_terms) {
        auto it = oracle.find(term.label);
        c.expect(it != oracle.end() && it->second == term.value,
                 where + ": term " + term.label + " = " + std::to_string(term.value) + ", oracle " +
                     (it == oracle.end() ? std::string("missing") : std::to_string(it->second)));
      }
    }
  };
  run(ClassicalType::Sp, 2, 16, 2);
  run(ClassicalType::SO_odd, 1, 17, 2);
  run(ClassicalType::GL, 1, 20, 1);
  c.summary = std::to_string(rows) + " groups balanced (Sp_2n<=16, SO_2n+1<=17, GL_n<=20)";
}

// ---------------------------------------------------------------------------------------------
// 4. Inner forms of GL_n: brute force over enhanced parameters

Block plain_block(const std::string& core, int dim, int a, int mult = 1, Duality dual = Duality::None) {
  return {{core, dim, dual, core, {}}, a, mult};
}

/// All parameters of GLinner(n, d) with one fresh core per block (dims and block sizes from divisor splits of a partition).
void enumerate_inner(int n, int d, const std::function<void(const LParameter&)>& f) {
  for (const auto& parts : partitions(n)) {
    std::vector<std::pair<int, int>> cur;  // (dim, a) per part
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == parts.size()) {
        LParameter phi{{GroupKindL::GLinner, n, d}, {}};
        for (std::size_t k = 0; k < cur.size(); ++k) phi.blocks.push_back(plain_block("p" + std::to_string(k), cur[k].first, cur[k].second));
        f(phi);
        return;
      }
      for (int a = 1; a <= parts[i]; ++a)
        if (parts[i] % a == 0) {
          cur.push_back({parts[i] / a, a});
          rec(i + 1);
          cur.pop_back();
        }
    };
    rec(0);
  }
}

void inner_forms(Check& c) {
  long checked = 0, found = 0, expected_total = 0;
  for (int n = 1; n <= 12; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      long here = 0;
      enumerate_inner(n, d, [&](const LParameter& phi) {
        auto t = s_group(phi);
        for (long j = 0; j < t.cyclic_order; ++j) {
          EnhancedParameter p{phi, {{}, j}};
          // Oracle: a single block pi (x) S_d, with rho of exact order d.
          long ord = t.cyclic_order / std::gcd(j, static_cast<long>(t.cyclic_order));
          bool expect = phi.blocks.size() == 1 && phi.blocks[0].a == d && ord == d;
          bool got = is_cuspidal(p);
          ++checked;
          here += got;
          c.expect(got == expect, "n=" + std::to_string(n) + " d=" + std::to_string(d) + " a=" + std::to_string(phi.blocks[0].a) +
                                      " j=" + std::to_string(j) + ": got " + std::to_string(got));
        }
      });
      c.expect(here == euler_phi(d), "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " + std::to_string(here) +
                                         " cuspidal, expected phi(d)=" + std::to_string(euler_phi(d)));
      found += here;
      expected_total += euler_phi(d);
    }
  // GL_1(D): chi (x) S_d with rho of order d, for D of index d.
  for (int d = 2; d <= 6; ++d) {
    LParameter phi{{GroupKindL::GLinner, d, d}, {plain_block("chi", 1, d)}};
    for (long j = 0; j < d; ++j) {
      EnhancedParameter p{phi, {{}, j}};
      c.expect(is_cuspidal(p) == (std::gcd(j, static_cast<long>(d)) == 1), "GL_1(D) d=" + std::to_string(d) + " j=" + std::to_string(j));
      c.expect(is_relevant(p) == (std::gcd(j, static_cast<long>(d)) == 1), "GL_1(D) relevance d=" + std::to_string(d));
    }
  }
  c.expect(run_builtin_case("cusp-inner").pass, "built-in inner-form case failed");
  c.summary = std::to_string(checked) + " enhanced parameters, " + std::to_string(found) + " cuspidal (oracle " +
              std::to_string(expected_total) + ")";
}

// ---------------------------------------------------------------------------------------------
// 5. Unitary groups: sign patterns against the staircase rule

void unitary(Check& c) {
  long checked = 0, found = 0, expected_total = 0;
  for (int n = 1; n <= 10; ++n) {
    long here = 0;
    // Block shapes: a partition of k for the conjugate-orthogonal core o and of n - k for the conjugate-symplectic core s.
    for (int k = 0; k <= n; ++k) {
      auto po = k == 0 ? std::vector<Partition>{{}} : partitions(k);
      auto ps = n - k == 0 ? std::vector<Partition>{{}} : partitions(n - k);
      for (const auto& lo : po)
        for (const auto& ls : ps) {
          LParameter phi{{GroupKindL::U, n, 1}, {}};
          std::map<int, int> mo, ms;
          for (int a : lo) ++mo[a];
          for (int a : ls) ++ms[a];
          for (auto [a, m] : mo) phi.blocks.push_back(plain_block("o", 1, a, m, Duality::ConjOrth));
          for (auto [a, m] : ms) phi.blocks.push_back(plain_block("s", 1, a, m, Duality::ConjSymp));
          // skip shapes rejected by validation
          try {
            validate(phi);
          } catch (const ValidationError&) {
            continue;
          }
          bool discrete = true;
          for (const auto& b : phi.blocks) discrete = discrete && b.mult == 1;
          auto t = s_group(phi);
          auto r = t.generator_names.size();
          for (unsigned bits = 0; bits < (1u << r); ++bits) {
            Enhancement rho;
            for (std::size_t i = 0; i < r; ++i)
              if (bits >> i & 1) rho.signs[t.generator_names[i]] = -1;
            auto sign = [&](const std::string& core, int a) { return rho.signs.count({core, a}) ? -1 : 1; };
            // Staircase: a = start, start+2, ... with alternating signs; on the symplectic side z_2 = -1.
            auto stair = [&](const std::map<int, int>& as, int start, const std::string& core) {
              int i = 0, prev = 0;
              for (auto [a, m] : as) {
                if (a != start + 2 * i) return false;
                if (i > 0 && sign(core, a) == sign(core, prev)) return false;
                prev = a;
                ++i;
              }
              return start == 1 || as.empty() || sign(core, 2) == -1;
            };
            bool expect = discrete && stair(mo, 1, "o") && stair(ms, 2, "s");
            bool got = is_cuspidal({phi, rho});
            ++checked;
            here += got;
            c.expect(got == expect, "U(" + std::to_string(n) + ") o" + to_string(lo) + " s" + to_string(ls) + " signs " +
                                        std::to_string(bits) + ": got " + std::to_string(got));
          }
        }
    }
    // Count oracle: n = k^2 + l(l+1); two sign patterns when k > 0, one otherwise.
    long expect_here = 0;
    for (int k = 0; k * k <= n; ++k)
      for (int l = 0; k * k + l * (l + 1) <= n; ++l)
        if (k * k + l * (l + 1) == n) expect_here += k > 0 ? 2 : 1;
    c.expect(here == expect_here, "U(" + std::to_string(n) + "): " + std::to_string(here) + " cuspidal, count oracle " +
                                      std::to_string(expect_here));
    found += here;
    expected_total += expect_here;
  }
  c.summary = std::to_string(checked) + " enhanced parameters, " + std::to_string(found) + " cuspidal (oracle " +
              std::to_string(expected_total) + ")";
}

// ---------------------------------------------------------------------------------------------
// 6. Clifford theory for twisted group algebras

struct CliffordCase {
  std::string name;
  GroupPtr gamma;
  SubgroupHandle n;
  std::optional<TwoCocycle> natural;  // on quotient(gamma, n).group
};

int element_of_order(const GroupPtr& g, int order) {
  for (int x = 0; x < static_cast<int>(g->order()); ++x)
    if (g->element_order(x) == order) return x;
  return -1;
}

/// The nontrivial Klein class pulled back along an isomorphism Gamma/N -> (Z/2)^2, if there is one.
std::optional<TwoCocycle> klein_class_on(const GroupPtr& q) {
  auto k = klein_nontrivial();
  auto iso = find_isomorphism(*q, *k.group());
  if (!iso) return std::nullopt;
  return pullback(k, make_hom(q, k.group(), *iso));
}

std::vector<CliffordCase> clifford_cases(std::mt19937& rng) {
  std::vector<CliffordCase> out;
  auto add = [&](const std::string& name, const GroupPtr& g, const SubgroupHandle& n) { out.push_back({name, g, n, std::nullopt}); };
  auto s4 = FiniteGroup::symmetric(4);
  std::vector<int> threes;
  for (int x = 0; x < 24; ++x)
    if (s4->element_order(x) == 3) threes.push_back(x);
  auto a4_in_s4 = generated_subgroup(s4, threes);
  std::vector<int> v4_gens;
  for (int x = 0; x < 24; ++x)
    if (s4->element_order(x) == 2 && s4->classes()[static_cast<std::size_t>(s4->class_of(x))].size() == 3) v4_gens.push_back(x);
  auto v4_in_s4 = generated_subgroup(s4, v4_gens);
  add("S4>A4", s4, a4_in_s4);
  add("S4>V4", s4, v4_in_s4);
  auto a4 = FiniteGroup::alternating(4);
  std::vector<int> a4_inv;
  for (int x = 0; x < 12; ++x)
    if (a4->element_order(x) == 2) a4_inv.push_back(x);
  add("A4>V4", a4, generated_subgroup(a4, a4_inv));
  auto q8 = FiniteGroup::quaternion();
  add("Q8>Z", q8, center(q8));
  add("Q8>C4", q8, generated_subgroup(q8, {element_of_order(q8, 4)}));
  for (int n : {3, 4, 5, 6, 8, 12}) {
    auto d = FiniteGroup::dihedral(n);
    add("D" + std::to_string(n) + ">rot", d, generated_subgroup(d, {element_of_order(d, n)}));
    if (n % 2 == 0) add("D" + std::to_string(n) + ">Z", d, center(d));
  }
  auto s3c2 = direct_product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(2));
  add("S3xC2>C2", s3c2, generated_subgroup(s3c2, {1}));
  auto s3s3 = direct_product(FiniteGroup::symmetric(3), FiniteGroup::symmetric(3));
  std::vector<int> left;
  for (int x = 0; x < 6; ++x) left.push_back(x * 6);
  add("S3xS3>S3", s3s3, generated_subgroup(s3s3, left));
  auto s4c4 = direct_product(s4, FiniteGroup::cyclic(4));
  std::vector<int> v4c;
  for (int x : v4_in_s4.elements) v4c.push_back(x * 4);
  add("S4xC4>V4", s4c4, generated_subgroup(s4c4, v4c));
  auto q8c3 = direct_product(q8, FiniteGroup::cyclic(3));
  add("Q8xC3>C3", q8c3, generated_subgroup(q8c3, {1}));
  auto a5 = FiniteGroup::alternating(5);
  add("A5>1", a5, trivial_subgroup(a5));

  // Cases carrying a nontrivial class on Gamma/N, each also under random coboundary twists.
  std::vector<CliffordCase> twisted;
  auto e3 = FiniteGroup::elementary_abelian2(3);
  twisted.push_back({"E8>C2", e3, generated_subgroup(e3, {4}), std::nullopt});
  twisted.push_back({"Q8>Z", q8, center(q8), std::nullopt});
  auto d4 = FiniteGroup::dihedral(4);
  twisted.push_back({"D4>Z", d4, center(d4), std::nullopt});
  auto c2c4 = direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
  twisted.push_back({"C2xC4>C2", c2c4, generated_subgroup(c2c4, {2}), std::nullopt});
  auto d4c2 = direct_product(d4, FiniteGroup::cyclic(2));
  twisted.push_back({"D4xC2>D4.Z", d4c2, generated_subgroup(d4c2, {element_of_order(d4, 4) * 2, 1}), std::nullopt});
  for (auto& t : twisted) {
    auto qg = quotient(t.gamma, t.n).group;
    auto k = klein_class_on(qg);
    if (!k) continue;
    for (int r = 0; r < 3; ++r) {
      auto beta = random_roots(rng, qg->order(), 4);
      out.push_back({t.name + "/klein#" + std::to_string(r), t.gamma, t.n, twist_by(*k, beta)});
    }
  }
  // Random coboundaries over the trivial class.
  for (std::size_t i = 0; i < 4; ++i) {
    auto base = out[i];
    auto qg = quotient(base.gamma, base.n).group;
    out.push_back({base.name + "/cobdry", base.gamma, base.n, coboundary(qg, random_roots(rng, qg->order(), 6))});
  }
  return out;
}

std::vector<std::size_t> sorted_dims(const std::vector<TGAIrrep>& v) {
  std::vector<std::size_t> d;
  for (const auto& r : v) d.push_back(r.dim);
  std::sort(d.begin(), d.end());
  return d;
}

void clifford_suite(Check& c) {
  std::mt19937 rng(2024);
  auto cases = clifford_cases(rng);
  std::size_t pairs = 0, cocycles = 0, modules = 0;
  std::set<std::string> distinct_pairs;
  for (const auto& cc : cases) {
    c.expect(cc.gamma->order() <= 96, cc.name + ": order above 96");
    distinct_pairs.insert(cc.name.substr(0, cc.name.find('/')));
    if (cc.natural) ++cocycles;
    auto qr = quotient(cc.gamma, cc.n);
    TwoCocycle natural = cc.natural ? *cc.natural : TwoCocycle::trivial(qr.group);
    auto rep = clifford_bijection(cc.gamma, cc.n, natural);
    std::string tag = cc.name + ": ";

    // Counting: modules of K[Gamma, natural] are counted by natural-regular classes.
    auto inflated = pullback(natural, qr.projection);
    c.expect(rep.targets.size() == regular_class_count(inflated), tag + "module count differs from the regular class count");
    c.expect(rep.matches.size() == rep.targets.size(), tag + "matching is not a bijection");
    std::set<int> hit;
    std::size_t sq = 0;
    for (const auto& t : rep.targets) sq += t.dim * t.dim;
    c.expect(sq == cc.gamma->order(), tag + "sum of squared dimensions is not |Gamma|");

    auto np = NormalPair::make(cc.gamma, cc.n);
    for (std::size_t o = 0; o < rep.orbits.size(); ++o) {
      int pi = rep.orbits[o].orbit.front();
      auto d = intertwiner_cocycle(np, pi);
      auto c_tau = pullback(natural, quotient_inclusion(d, qr)) * d.kappa;
      auto taus = twisted_irreps(c_tau);
      const auto& chi = np.n_characters()[static_cast<std::size_t>(pi)];
      auto deg = static_cast<std::size_t>(std::stoul(chi.degree().to_string()));
      for (const auto& m : rep.matches) {
        if (m.orbit.front() != pi) continue;
        hit.insert(m.target);
        ++modules;
        const auto& v = rep.targets[static_cast<std::size_t>(m.target)];
        auto dim_tau = taus[static_cast<std::size_t>(m.tau)].dim;
        // dim(tau x| pi) = |orbit| deg(pi) dim(tau)
        c.expect(v.dim == m.orbit.size() * deg * dim_tau, tag + "dimension formula fails");
        // Frobenius reciprocity: <Res_N V, pi> = dim(tau)
        Cyclotomic s(0);
        for (std::size_t i = 0; i < cc.n.elements.size(); ++i)
          s += v.traces[static_cast<std::size_t>(cc.n.elements[i])] * chi.at(static_cast<int>(i)).conj();
        c.expect(s == Cyclotomic(static_cast<long>(dim_tau * cc.n.order())), tag + "restriction multiplicity is not dim(tau)");
      }
    }
    c.expect(hit.size() == rep.targets.size(), tag + "some module is not reached");

    // Coboundary twists of natural keep the dimension multiset.
    auto beta = random_roots(rng, qr.group->order(), 4);
    auto rep2 = clifford_bijection(cc.gamma, cc.n, twist_by(natural, beta));
    c.expect(sorted_dims(rep2.targets) == sorted_dims(rep.targets), tag + "coboundary twist changed the dimensions");
    ++pairs;
  }
  c.expect(distinct_pairs.size() >= 20, "fewer than 20 distinct (Gamma, N) pairs");
  c.expect(cocycles >= 10, "fewer than 10 random cocycles");
  c.summary = std::to_string(distinct_pairs.size()) + " (Gamma,N) pairs, " + std::to_string(pairs) + " runs, " +
              std::to_string(cocycles) + " random cocycles, " + std::to_string(modules) + " modules checked";
}

// ---------------------------------------------------------------------------------------------
// 7. Twisted extended quotients: degeneration and violation witnesses

template <class F>
std::string violation_of(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

void extended_quotient_laws(Check& c) {
  std::mt19937 rng(77);
  std::vector<GroupPtr> groups{FiniteGroup::symmetric(3), FiniteGroup::dihedral(4), FiniteGroup::quaternion(),
                               FiniteGroup::alternating(4), FiniteGroup::cyclic(6), FiniteGroup::symmetric(4)};
  std::size_t data = 0, points = 0;
  for (const auto& g : groups)
    for (int trial = 0; trial < 8; ++trial) {
      std::uniform_int_distribution<int> el(0, static_cast<int>(g->order()) - 1), cnt(1, 3);
      std::vector<SubgroupHandle> hs;
      for (int i = cnt(rng); i > 0; --i) hs.push_back(generated_subgroup(g, {el(rng), trial % 2 ? el(rng) : 0}));
      auto d = coset_datum(g, hs);
      auto plain = build_extended_quotient(d);
      std::string tag = g->name() + " trial " + std::to_string(trial) + ": ";
      // Trivial cocycles: the classical extended quotient, counted by Gamma-orbits of (x, a) with a in Gamma_x.
      c.expect(plain.points.size() == inertia_pair_orbits(d), tag + "untwisted count differs from the inertia-pair orbit count");
      // Cohomologically trivial twisted data degenerates to the same answer.
      apply_coboundary_data(d, rng);
      auto twisted = build_extended_quotient(d);
      c.expect(twisted.points.size() == plain.points.size() && twisted.fiber_sizes == plain.fiber_sizes,
               tag + "coboundary data changed the quotient");
      std::size_t orbit_total = 0;
      for (const auto& p : twisted.points) orbit_total += p.orbit_size;
      std::size_t pairs = 0, over_reps = 0;
      for (std::size_t x = 0; x < d.size(); ++x) pairs += regular_class_count(d.kappa[x]);
      for (const auto& orbit : twisted.x_orbits) over_reps += regular_class_count(d.kappa[static_cast<std::size_t>(orbit.front())]);
      c.expect(orbit_total == pairs, tag + "orbits do not partition the pairs (x, rho)");
      c.expect(twisted.points.size() == over_reps, tag + "point count is not the sum of |Irr K[Gamma_x, kappa_x]| over X/Gamma");

      // Free action: the quotient is X/Gamma with one-dimensional points.
      auto free = coset_datum(g, std::vector<SubgroupHandle>(static_cast<std::size_t>(1 + trial % 3), trivial_subgroup(g)));
      apply_coboundary_data(free, rng);
      auto fq = build_extended_quotient(free);
      bool ones = true;
      for (const auto& p : fq.points) ones = ones && p.dim == 1 && p.orbit_size == g->order();
      c.expect(fq.points.size() == static_cast<std::size_t>(1 + trial % 3) && ones, tag + "free action does not give X/Gamma");
      ++data;
      points += twisted.points.size();
    }

  // Witnesses: each broken law is reported by validation.
  {
    auto g = FiniteGroup::cyclic(3);
    auto d = ActionDatum::make({"o"}, g, {0, 0, 0});
    std::vector<RootOfUnity> chi{RootOfUnity(1, 0), RootOfUnity(3, 1), RootOfUnity(3, 2)};
    d.set_scalars(1, 0, chi);
    d.set_scalars(2, 0, chi);
    auto msg = violation_of([&] { build_extended_quotient(d); });
    c.expect(msg.find("compose") != std::string::npos, "composition violation not reported: '" + msg + "'");
  }
  {
    auto g = FiniteGroup::cyclic(3);
    auto d = ActionDatum::make({"o"}, g, {0, 0, 0});
    d.set_scalars(1, 0, {RootOfUnity(1, 0), RootOfUnity(2, 1), RootOfUnity(1, 0)});
    auto msg = violation_of([&] { build_extended_quotient(d); });
    c.expect(msg.find("homomorphism") != std::string::npos, "algebra-map violation not reported: '" + msg + "'");
  }
  {
    auto g = FiniteGroup::elementary_abelian2(3);
    std::vector<int> action;
    for (int a = 0; a < 8; ++a)
      for (int x = 0; x < 2; ++x) action.push_back(a & 4 ? 1 - x : x);
    auto d = ActionDatum::make({"p", "q"}, g, action);
    auto k = klein_class_on(d.stabilizer_groups[0].group);
    d.set_kappa(0, *k);
    auto msg = violation_of([&] { build_extended_quotient(d); });
    c.expect(!msg.empty(), "cocycle mismatch along an orbit not reported");
    d.set_kappa(1, *k);
    auto eq = build_extended_quotient(d);
    c.expect(eq.points.size() == 1 && eq.points[0].dim == 2, "Klein class on a swapped pair should give one 2-dim point");
  }
  c.summary = std::to_string(data) + " random data, " + std::to_string(points) + " points, 3 violation witnesses";
}

// ---------------------------------------------------------------------------------------------
// 8. The unramified component of GL_4

void gl4_fiber(Check& c) {
  EnhancedParameter p{{{GroupKindL::GLinner, 4, 1}, {plain_block("triv", 1, 1, 4)}}, {}};
  auto s = bernstein_component(p);
  auto cq = component_extended_quotient(s);
  // Oracle: the points over the zero twist are the S_4-conjugacy classes, i.e. partitions of 4, enumerated here.
  std::set<Partition> parts;
  std::function<void(int, int, Partition&)> rec = [&](int left, int maxp, Partition& cur) {
    if (left == 0) {
      parts.insert(cur);
      return;
    }
    for (int x = std::min(left, maxp); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x, cur);
      cur.pop_back();
    }
  };
  Partition cur;
  rec(4, 4, cur);
  c.expect(s.w->order() == 24, "W_s should be S_4");
  c.expect(cq.points.size() == parts.size(), "fiber has " + std::to_string(cq.points.size()) + " points, expected " +
                                                 std::to_string(parts.size()));
  std::set<Partition> seen;
  for (const auto& pt : cq.points) {
    if (!pt.parameter) {
      c.expect(false, "point without a parameter");
      continue;
    }
    const auto& phi = pt.parameter->phi;
    c.expect(is_bounded(phi), "parameter is not bounded");
    c.expect(bernstein_component(*pt.parameter) == s, "parameter leaves the component");
    std::vector<int> as;
    for (const auto& b : phi.blocks)
      for (int m = 0; m < b.mult; ++m) as.push_back(b.a);
    seen.insert(make_partition(as));
  }
  c.expect(seen == parts, "parameters do not run through the partitions of 4");

  // Independent count: bounded enhanced parameters of GL_4 on the core triv whose support lies in the component.
  std::size_t with_support = 0;
  for (const auto& lam : parts) {
    std::map<int, int> mult;
    for (int a : lam) ++mult[a];
    LParameter phi{{GroupKindL::GLinner, 4, 1}, {}};
    for (auto [a, m] : mult) phi.blocks.push_back(plain_block("triv", 1, a, m));
    phi = validate(phi);
    for (long j = 0; j < s_group(phi).cyclic_order; ++j)
      with_support += bernstein_component({phi, {{}, j}}) == s;
  }
  c.expect(with_support == cq.points.size(), "enumerated " + std::to_string(with_support) + " parameters with this support");
  c.summary = std::to_string(cq.points.size()) + " points = partitions of 4, all bounded";
}

// ---------------------------------------------------------------------------------------------
// 9. Random type-A parameters: support laws

using Eigen = std::vector<std::tuple<std::string, int, Rational, RootOfUnity>>;

std::vector<std::string> block_keys(const std::vector<Block>& blocks) {
  std::vector<std::string> out;
  for (const auto& b : blocks)
    for (int m = 0; m < b.mult; ++m)
      out.push_back(b.label.core + "/" + std::to_string(b.label.dim) + "/" + to_string(b.label.twist) + "/" + std::to_string(b.a));
  std::sort(out.begin(), out.end());
  return out;
}

EnhancedParameter random_type_a(std::mt19937& rng) {
  std::uniform_int_distribution<int> nblocks(1, 4), core(0, 2), a(1, 4), mult(1, 2), half(-4, 4), zord(1, 3);
  LParameter phi{{GroupKindL::GLinner, 0, 1}, {}};
  for (int i = nblocks(rng); i > 0; --i) {
    int c = core(rng), o = zord(rng);
    Block b = plain_block(std::string(1, static_cast<char>('a' + c)), c == 1 ? 2 : 1, a(rng), mult(rng));
    b.label.twist = {frac(half(rng), 2), RootOfUnity(o, std::uniform_int_distribution<int>(0, o - 1)(rng))};
    phi.group.n += b.label.dim * b.a * b.mult;
    phi.blocks.push_back(b);
  }
  std::vector<int> divisors;
  for (int d = 1; d <= phi.group.n; ++d)
    if (phi.group.n % d == 0) divisors.push_back(d);
  phi.group.d = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
  phi = validate(phi);
  long g = s_group(phi).cyclic_order;
  return {phi, {{}, std::uniform_int_distribution<long>(0, g - 1)(rng)}};
}

void random_type_a_laws(Check& c) {
  std::mt19937 rng(4242);
  int cuspidal = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = random_type_a(rng);
    std::string tag = "trial " + std::to_string(trial) + ": ";
    auto cd = cuspidal_support(p);
    // Idempotence: the support is cuspidal on its Levi and is its own support.
    c.expect(is_cuspidal_datum(cd), tag + "support is not cuspidal");
    auto again = cuspidal_support(cd.on_levi);
    c.expect(again.levi == cd.levi && block_keys(again.on_levi.phi.blocks) == block_keys(cd.on_levi.phi.blocks) &&
                 again.on_levi.rho == cd.on_levi.rho,
             tag + "support is not idempotent");
    // Infinitesimal character and central character are preserved.
    c.expect(infinitesimal_multiset(cd.on_levi.phi) == infinitesimal_multiset(p.phi), tag + "eigenvalue multiset changed");
    c.expect(central_character(cd.on_levi.phi, cd.on_levi.rho) == central_character(p.phi, p.rho), tag + "central character changed");
    c.expect(std::accumulate(cd.levi.begin(), cd.levi.end(), 0) == p.phi.group.n, tag + "Levi sizes do not add up");
    // Factorization through the standard triple: supports of the bounded factors, twisted back by z.
    auto st = standard_triple(p);
    auto factors = standard_triple_factors(st);
    std::vector<Block> glued;
    std::vector<int> levi;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      auto fi = cuspidal_support(factors[i]);
      for (auto b : fi.on_levi.phi.blocks) {
        b.label.twist.s += st.z[i];
        glued.push_back(b);
      }
      levi.insert(levi.end(), fi.levi.begin(), fi.levi.end());
    }
    auto sorted_levi = cd.levi;
    std::sort(sorted_levi.begin(), sorted_levi.end());
    std::sort(levi.begin(), levi.end());
    c.expect(block_keys(glued) == block_keys(cd.on_levi.phi.blocks) && levi == sorted_levi,
             tag + "support does not factor through the standard triple");
    cuspidal += is_cuspidal(p);
  }
  c.summary = "1000 parameters (" + std::to_string(cuspidal) + " cuspidal): idempotent, eigenvalues and central character kept";
}

}  // namespace

int main() {
  std::cout << "lpcusp acceptance suite" << std::endl;
  int failures = 0;
  failures += run_criterion(1, "example-A: section cocycle, intertwiner cocycle, twisted modules", 1.0, example_a);
  failures += run_criterion(2, "example-B: extended quotient for SL_5(D)", 1.0, example_b);
  failures += run_criterion(3, "census: Sp_2n (2n<=16), SO_2n+1 (<=17), GL_n (n<=20)", 10.0, census_criterion);
  failures += run_criterion(4, "cuspidality for inner forms of GL_n, n<=12, and GL_1(D)", 5.0, inner_forms);
  failures += run_criterion(5, "cuspidality for U(n), n<=10, against the staircase rule", 5.0, unitary);
  failures += run_criterion(6, "Clifford theory for twisted group algebras", 60.0, clifford_suite);
  failures += run_criterion(7, "twisted extended quotient laws", 10.0, extended_quotient_laws);
  failures += run_criterion(8, "GL_4 unramified fiber", 5.0, gl4_fiber);
  failures += run_criterion(9, "random type-A parameters: cuspidal support laws", 10.0, random_type_a_laws);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
