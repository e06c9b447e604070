#include "lpcusp/extquot.hpp"

#include <algorithm>
#include <numeric>

#include "lpcusp/error.hpp"

namespace lpcusp {

ActionDatum ActionDatum::make(std::vector<std::string> labels, GroupPtr gamma, std::vector<int> action) {
  ActionDatum d;
  d.labels = std::move(labels);
  d.gamma = std::move(gamma);
  d.action = std::move(action);
  std::size_t nx = d.size(), ng = d.gamma->order();
  if (nx == 0) throw ValidationError("action datum: X is empty");
  if (d.action.size() != ng * nx) throw ValidationError("action datum: action table must have |Gamma| * |X| entries");
  for (int v : d.action)
    if (v < 0 || static_cast<std::size_t>(v) >= nx) throw ValidationError("action datum: action value out of range");
  for (std::size_t x = 0; x < nx; ++x)
    if (d.act(0, static_cast<int>(x)) != static_cast<int>(x)) throw ValidationError("action datum: identity moves " + d.labels[x]);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h)
      for (std::size_t x = 0; x < nx; ++x) {
        int gh = d.gamma->mul(static_cast<int>(g), static_cast<int>(h));
        if (d.act(gh, static_cast<int>(x)) != d.act(static_cast<int>(g), d.act(static_cast<int>(h), static_cast<int>(x))))
          throw ValidationError("action datum: not an action at (" + std::to_string(g) + ", " + std::to_string(h) + ", " +
                                d.labels[x] + ")");
      }
  for (std::size_t x = 0; x < nx; ++x) {
    std::vector<int> stab;
    for (std::size_t g = 0; g < ng; ++g)
      if (d.act(static_cast<int>(g), static_cast<int>(x)) == static_cast<int>(x)) stab.push_back(static_cast<int>(g));
    d.stabilizers.push_back(make_subgroup(d.gamma, std::move(stab)));
    d.stabilizer_groups.push_back(as_group(d.stabilizers.back()));
    d.kappa.push_back(TwoCocycle::trivial(d.stabilizer_groups.back().group));
  }
  return d;
}

RootOfUnity ActionDatum::lambda(int g, int x, int a) const {
  auto it = scalars.find({g, x});
  if (it == scalars.end()) return {};
  int pos = stabilizers[static_cast<std::size_t>(x)].position(a);
  if (pos < 0) throw ValidationError("element is not in the isotropy group");
  return it->second[static_cast<std::size_t>(pos)];
}

void ActionDatum::set_kappa(int x, TwoCocycle c) {
  const auto& sg = stabilizer_groups.at(static_cast<std::size_t>(x)).group;
  if (c.group()->order() != sg->order())
    throw ValidationError("cocycle for " + labels[static_cast<std::size_t>(x)] + " must live on the isotropy group of order " +
                          std::to_string(sg->order()));
  kappa[static_cast<std::size_t>(x)] = TwoCocycle::validated(sg, c.m(), c.exponents());
}

void ActionDatum::set_scalars(int g, int x, std::vector<RootOfUnity> values) {
  if (g < 0 || static_cast<std::size_t>(g) >= gamma->order() || x < 0 || static_cast<std::size_t>(x) >= size())
    throw ValidationError("connecting scalars: index out of range");
  if (values.size() != stabilizers[static_cast<std::size_t>(x)].order())
    throw ValidationError("connecting scalars: need one value per element of the isotropy group");
  scalars[{g, x}] = std::move(values);
}

std::vector<Cyclotomic> transport_traces(const ActionDatum& d, int g, int x, const std::vector<Cyclotomic>& traces) {
  int y = d.act(g, x);
  const auto& sy = d.stabilizers[static_cast<std::size_t>(y)];
  std::vector<Cyclotomic> out(sy.order());
  int ginv = d.gamma->inv(g);
  // phi^-1(T_b) = T_a / lambda(a) with a = g^-1 b g.
  for (std::size_t i = 0; i < sy.order(); ++i) {
    int a = d.gamma->conj(sy.elements[i], ginv);
    int pos = d.stabilizers[static_cast<std::size_t>(x)].position(a);
    out[i] = traces[static_cast<std::size_t>(pos)] * d.lambda(g, x, a).inverse().value();
  }
  return out;
}

namespace {

std::string triple(int a, int b, const std::string& x) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + x + ")";
}

}  // namespace

void ActionDatum::validate(std::size_t bound) const {
  const auto& G = *gamma;
  std::size_t ng = G.order(), nx = size();
  for (std::size_t x = 0; x < nx; ++x) {
    const auto& sx = stabilizers[x];
    const auto& kx = kappa[x];
    for (std::size_t g = 0; g < ng; ++g) {
      int ig = static_cast<int>(g);
      auto y = static_cast<std::size_t>(act(ig, static_cast<int>(x)));
      const auto& ky = kappa[y];
      const auto& sy = stabilizers[y];
      // lambda(a) lambda(b) kappa_y(g a g^-1, g b g^-1) = kappa_x(a, b) lambda(ab)
      for (std::size_t i = 0; i < sx.order(); ++i)
        for (std::size_t j = 0; j < sx.order(); ++j) {
          int a = sx.elements[i], b = sx.elements[j];
          int ab = G.mul(a, b);
          int ca = sy.position(G.conj(a, ig)), cb = sy.position(G.conj(b, ig));
          RootOfUnity lhs = lambda(ig, static_cast<int>(x), a) * lambda(ig, static_cast<int>(x), b) * ky(ca, cb);
          RootOfUnity rhs = kx(static_cast<int>(i), static_cast<int>(j)) * lambda(ig, static_cast<int>(x), ab);
          if (!(lhs == rhs))
            throw ValidationError("connecting map for gamma=" + std::to_string(g) + " at " + labels[x] +
                                  " is not an algebra homomorphism at " + triple(a, b, labels[x]));
        }
      // phi_{h, gx} o phi_{g, x} = phi_{hg, x}
      for (std::size_t h = 0; h < ng; ++h) {
        int ih = static_cast<int>(h), hg = G.mul(ih, ig);
        for (int a : sx.elements) {
          RootOfUnity lhs = lambda(ih, static_cast<int>(y), G.conj(a, ig)) * lambda(ig, static_cast<int>(x), a);
          if (!(lhs == lambda(hg, static_cast<int>(x), a)))
            throw ValidationError("connecting maps do not compose at " + triple(ih, ig, labels[x]));
        }
      }
      // kappa_gx and g_* kappa_x define the same class.
      if (y != x || g != 0) {
        std::vector<int> image;
        for (int b : sy.elements) image.push_back(sx.position(G.conj(b, G.inv(ig))));
        auto back = make_hom(stabilizer_groups[y].group, stabilizer_groups[x].group, std::move(image));
        if (!cohomologous(ky, pullback(kx, back)))
          throw ValidationError("cocycles at " + labels[y] + " and the transport from " + labels[x] + " are not cohomologous");
      }
    }
    // phi_{g,x} is inner for g in Gamma_x: it fixes every irreducible class.
    auto irr = twisted_irreps(kx, bound);
    for (int g : sx.elements)
      for (const auto& rho : irr)
        if (transport_traces(*this, g, static_cast<int>(x), rho.traces) != rho.traces)
          throw ValidationError("connecting map for gamma=" + std::to_string(g) + " at " + labels[x] + " is not inner");
  }
}

ExtendedQuotient build_extended_quotient(const ActionDatum& d, std::size_t bound) {
  d.validate(bound);
  std::size_t nx = d.size();
  const auto& gens = d.gamma->generators();
  std::vector<std::vector<TGAIrrep>> irr(nx);
  std::vector<std::size_t> offset(nx + 1, 0);
  for (std::size_t x = 0; x < nx; ++x) {
    irr[x] = twisted_irreps(d.kappa[x], 0);
    offset[x + 1] = offset[x] + irr[x].size();
  }
  // Pairs (x, rho) are numbered offset[x] + rho; union along generator moves.
  std::vector<int> parent(offset[nx]);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (std::size_t x = 0; x < nx; ++x)
    for (int s : gens) {
      auto y = static_cast<std::size_t>(d.act(s, static_cast<int>(x)));
      for (std::size_t r = 0; r < irr[x].size(); ++r) {
        int t = find_by_traces(irr[y], transport_traces(d, s, static_cast<int>(x), irr[x][r].traces));
        if (t < 0) throw Error("transported module is not irreducible at " + d.labels[y]);
        int a = find(static_cast<int>(offset[x] + r)), b = find(static_cast<int>(offset[y]) + t);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  ExtendedQuotient eq;
  std::vector<int> seen(nx, 0);
  for (std::size_t x = 0; x < nx; ++x) {
    if (seen[x]) continue;
    std::vector<int> orb;
    for (std::size_t g = 0; g < d.gamma->order(); ++g) orb.push_back(d.act(static_cast<int>(g), static_cast<int>(x)));
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    for (int y : orb) seen[static_cast<std::size_t>(y)] = 1;
    eq.x_orbits.push_back(orb);
    eq.fiber_sizes.push_back(irr[x].size());
  }
  std::vector<std::size_t> count(parent.size(), 0);
  for (std::size_t v = 0; v < parent.size(); ++v) ++count[static_cast<std::size_t>(find(static_cast<int>(v)))];
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t r = 0; r < irr[x].size(); ++r) {
      auto v = offset[x] + r;
      if (find(static_cast<int>(v)) != static_cast<int>(v)) continue;
      eq.points.push_back({static_cast<int>(x), static_cast<int>(r), irr[x][r].dim, irr[x][r].traces, count[v]});
    }
  std::size_t expected = 0;
  for (auto f : eq.fiber_sizes) expected += f;
  if (expected != eq.points.size()) throw Error("extended quotient: fiber sizes do not add up to the number of points");
  return eq;
}

std::vector<std::vector<Cyclotomic>> fiber_over(const ActionDatum& d, int x, std::size_t bound) {
  if (x < 0 || static_cast<std::size_t>(x) >= d.size()) throw ValidationError("fiber_over: point out of range");
  int r = x, g0 = 0;
  for (std::size_t g = 0; g < d.gamma->order(); ++g) {
    int y = d.act(static_cast<int>(g), x);
    if (y < r) {
      r = y;
      g0 = static_cast<int>(g);
    }
  }
  auto here = twisted_irreps(d.kappa[static_cast<std::size_t>(x)], bound);
  auto there = twisted_irreps(d.kappa[static_cast<std::size_t>(r)], bound);
  std::vector<std::vector<Cyclotomic>> out;
  std::vector<char> hit(there.size(), 0);
  for (const auto& rho : here) {
    auto t = transport_traces(d, g0, x, rho.traces);
    int k = find_by_traces(there, t);
    if (k < 0 || hit[static_cast<std::size_t>(k)]) throw Error("fiber_over: transport is not a bijection of irreducibles");
    hit[static_cast<std::size_t>(k)] = 1;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Cyclotomic& u, const Cyclotomic& v) { return canonical_compare(u, v) < 0; });
  });
  return out;
}

}  // namespace lpcusp
