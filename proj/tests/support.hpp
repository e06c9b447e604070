#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lpcusp/extquot.hpp"
#include "lpcusp/groups.hpp"
#include "lpcusp/tga.hpp"

namespace lpcusp::testing {

inline std::vector<RootOfUnity> random_roots(std::mt19937& rng, std::size_t n, int m) {
  std::uniform_int_distribution<int> d(0, m - 1);
  std::vector<RootOfUnity> out(n);
  for (std::size_t i = 1; i < n; ++i) out[i] = RootOfUnity(m, d(rng));
  return out;
}

/// The cocycle of Q8 -> Q8/{+-1} with lowest coset representatives: a nontrivial class on (Z/2)^2.
inline TwoCocycle klein_nontrivial() {
  auto q = FiniteGroup::quaternion();
  auto qr = quotient(q, center(q));
  auto n = qr.group->order();
  std::vector<int> e(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int prod = q->mul(qr.coset_reps[a], qr.coset_reps[b]);
      int ab = qr.projection(prod);
      e[a * n + b] = prod == qr.coset_reps[static_cast<std::size_t>(ab)] ? 0 : 1;
    }
  return TwoCocycle::validated(qr.group, 2, e);
}

/// Disjoint union of coset spaces Gamma/H_i with left multiplication.
inline ActionDatum coset_datum(const GroupPtr& g, const std::vector<SubgroupHandle>& hs) {
  std::vector<std::set<int>> cosets;
  std::vector<std::size_t> block;  // first coset index of each block
  for (const auto& h : hs) {
    block.push_back(cosets.size());
    std::set<std::set<int>> seen;
    for (int c = 0; c < static_cast<int>(g->order()); ++c) {
      std::set<int> s;
      for (int x : h.elements) s.insert(g->mul(c, x));
      if (seen.insert(s).second) cosets.push_back(s);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cosets.size(); ++i) labels.push_back("x" + std::to_string(i));
  std::vector<int> action;
  for (int a = 0; a < static_cast<int>(g->order()); ++a)
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      std::set<int> img;
      for (int x : cosets[i]) img.insert(g->mul(a, x));
      auto start = *std::prev(std::upper_bound(block.begin(), block.end(), i));
      int idx = -1;
      for (std::size_t j = start; j < cosets.size() && idx < 0; ++j)
        if (cosets[j] == img) idx = static_cast<int>(j);
      action.push_back(idx);
    }
  return ActionDatum::make(labels, g, action);
}

/// Orbits of Gamma on {(x, a) : a in Gamma_x} under h.(x, a) = (hx, h a h^-1).
inline std::size_t inertia_pair_orbits(const ActionDatum& d) {
  std::set<std::pair<int, int>> seen;
  std::size_t orbits = 0;
  for (std::size_t x = 0; x < d.size(); ++x)
    for (int a : d.stabilizers[x].elements) {
      if (seen.count({static_cast<int>(x), a})) continue;
      ++orbits;
      for (int h = 0; h < static_cast<int>(d.gamma->order()); ++h)
        seen.insert({d.act(h, static_cast<int>(x)), d.gamma->conj(a, h)});
    }
  return orbits;
}

/// kappa_x = d(beta_x) and lambda_{g,x}(a) = beta_x(a) / beta_gx(g a g^-1): cohomologically trivial data.
inline void apply_coboundary_data(ActionDatum& d, std::mt19937& rng) {
  std::vector<std::vector<RootOfUnity>> beta(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) {
    beta[x] = random_roots(rng, d.stabilizers[x].order(), 4);
    d.set_kappa(static_cast<int>(x), coboundary(d.stabilizer_groups[x].group, beta[x]));
  }
  for (int g = 0; g < static_cast<int>(d.gamma->order()); ++g)
    for (std::size_t x = 0; x < d.size(); ++x) {
      auto y = static_cast<std::size_t>(d.act(g, static_cast<int>(x)));
      std::vector<RootOfUnity> lam;
      for (std::size_t i = 0; i < d.stabilizers[x].order(); ++i) {
        int a = d.stabilizers[x].elements[i];
        auto j = static_cast<std::size_t>(d.stabilizers[y].position(d.gamma->conj(a, g)));
        lam.push_back(beta[x][i] * beta[y][j].inverse());
      }
      d.set_scalars(g, static_cast<int>(x), lam);
    }
}

}  // namespace lpcusp::testing
