#include "lpcusp/clifford.hpp"

#include <algorithm>

#include "lpcusp/error.hpp"

namespace lpcusp {

NormalPair NormalPair::make(GroupPtr gamma, SubgroupHandle n) {
  if (!is_normal(*gamma, n.elements)) throw ValidationError("subgroup is not normal");
  NormalPair np{gamma, n, as_group(n), {}};
  np.position.assign(gamma->order(), -1);
  for (std::size_t i = 0; i < n.elements.size(); ++i) np.position[static_cast<std::size_t>(n.elements[i])] = static_cast<int>(i);
  return np;
}

int NormalPair::act(int gamma_elem, int irrep_index) const {
  const auto& chars = n_characters();
  const Character& chi = chars[static_cast<std::size_t>(irrep_index)];
  const GroupPtr& ng = n_group.group;
  int ginv = gamma->inv(gamma_elem);
  std::vector<Cyclotomic> vals;
  for (const auto& cls : ng->classes()) {
    int e = n_group.embedding(cls.front());
    int conj = gamma->conj(e, ginv);  // gamma^-1 e gamma
    vals.push_back(chi.at(position[static_cast<std::size_t>(conj)]));
  }
  for (std::size_t j = 0; j < chars.size(); ++j)
    if (chars[j].values == vals) return static_cast<int>(j);
  throw Error("conjugate of an irreducible character is not in the character table");
}

OrbitStabilizer orbit_and_stabilizer(const NormalPair& np, int irrep_index) {
  std::vector<int> orbit, stab;
  for (std::size_t g = 0; g < np.gamma->order(); ++g) {
    int j = np.act(static_cast<int>(g), irrep_index);
    orbit.push_back(j);
    if (j == irrep_index) stab.push_back(static_cast<int>(g));
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  auto h = make_subgroup(np.gamma, stab);
  if (orbit.size() * h.order() != np.gamma->order()) throw Error("orbit-stabilizer count mismatch");
  return {orbit, h};
}

int irrep_index_of(const NormalPair& np, const MatrixRep& pi) {
  Character c = pi.character();
  if (!inner_product(c, c).is_one()) throw ValidationError("representation of N is reducible");
  const auto& chars = np.n_characters();
  for (std::size_t j = 0; j < chars.size(); ++j)
    if (chars[j].values == c.values) return static_cast<int>(j);
  throw Error("irreducible character not found in the table of N");
}

const CycloMatrix& CliffordDatum::pi_at(int n) const {
  int pos = np.position[static_cast<std::size_t>(n)];
  if (pos < 0) throw ValidationError("element is not in N");
  return pi(pos);
}

CycloMatrix CliffordDatum::intertwiner(int g) const {
  int q = label[static_cast<std::size_t>(g)];
  if (q < 0) throw ValidationError("element is not in the stabilizer of pi");
  const GroupPtr& G = np.gamma;
  int r = reps[static_cast<std::size_t>(q)];
  int n = G->mul(G->inv(r), g);
  return rep_intertwiners[static_cast<std::size_t>(q)] * pi_at(n);
}

namespace {

// I^r for r in Gamma_pi \ N: an extension sigma of pi to N<r>, conjugated so that sigma|_N = pi exactly.
CycloMatrix extension_intertwiner(const NormalPair& np, const MatrixRep& pi, int r, std::size_t bound) {
  const GroupPtr& G = np.gamma;
  std::vector<int> gens;
  for (int s : np.n_group.group->generators()) gens.push_back(np.n_group.embedding(s));
  gens.push_back(r);
  auto h = generated_subgroup(G, gens);
  auto hg = as_group(h);
  const auto& irr = irreps_matrices(hg.group, std::max(bound, hg.group->order()));
  std::size_t nn = np.n.order();
  for (const auto& sigma : irr) {
    if (sigma.dim() != pi.dim()) continue;
    bool match = true;
    for (std::size_t i = 0; i < nn && match; ++i) {
      int pos = h.position(np.n.elements[i]);
      match = sigma(pos).trace() == pi(static_cast<int>(i)).trace();
    }
    if (!match) continue;
    std::vector<CycloMatrix> res;
    for (std::size_t i = 0; i < nn; ++i) res.push_back(sigma(h.position(np.n.elements[i])));
    MatrixRep sigma_n(np.n_group.group, std::move(res));
    auto homs = hom_space(sigma_n, pi);
    if (homs.size() != 1) throw Error("extension of pi does not restrict irreducibly");
    const CycloMatrix& a = homs.front();
    auto ainv = a.inverse();
    if (!ainv) throw Error("intertwiner of equivalent irreducibles is singular");
    return a * sigma(h.position(r)) * *ainv;
  }
  throw Error("pi does not extend to N<r>; is r in the stabilizer?");
}

}  // namespace

CliffordDatum intertwiner_cocycle(const NormalPair& np, int irrep_index, const CliffordOptions& opts) {
  const GroupPtr& G = np.gamma;
  CliffordDatum d;
  d.np = np;
  d.pi_index = irrep_index;
  d.pi = irreps_matrices(np.n_group.group, std::max(opts.bound, np.n.order()))[static_cast<std::size_t>(irrep_index)];
  auto os = orbit_and_stabilizer(np, irrep_index);
  d.stabilizer = os.stabilizer;
  auto sg = as_group(d.stabilizer);
  std::vector<int> n_in_s;
  for (int x : np.n.elements) n_in_s.push_back(d.stabilizer.position(x));
  auto qr = quotient(sg.group, make_subgroup(sg.group, n_in_s));
  d.quotient = qr.group;
  d.label.assign(G->order(), -1);
  for (std::size_t i = 0; i < d.stabilizer.order(); ++i)
    d.label[static_cast<std::size_t>(d.stabilizer.elements[i])] = qr.projection(static_cast<int>(i));
  std::size_t qn = qr.group->order();
  d.reps.assign(qn, -1);
  if (!opts.section.empty()) {
    if (opts.section.size() != qn) throw ValidationError("section must give one representative per coset");
    for (std::size_t q = 0; q < qn; ++q) {
      int s = opts.section[q];
      if (s < 0 || static_cast<std::size_t>(s) >= G->order() || d.label[static_cast<std::size_t>(s)] != static_cast<int>(q))
        throw ValidationError("section value " + std::to_string(s) + " does not lie in coset " + std::to_string(q));
      d.reps[q] = s;
    }
  } else {
    for (std::size_t i = 0; i < d.stabilizer.order(); ++i) {
      int g = d.stabilizer.elements[i];
      auto q = static_cast<std::size_t>(d.label[static_cast<std::size_t>(g)]);
      if (d.reps[q] == -1 || opts.highest_representatives) d.reps[q] = g;
    }
  }
  for (std::size_t q = 0; q < qn; ++q) {
    int r = d.reps[q];
    if (np.position[static_cast<std::size_t>(r)] >= 0) {
      d.rep_intertwiners.push_back(d.pi_at(r));
    } else if (d.pi.dim() == 1) {
      d.rep_intertwiners.push_back(CycloMatrix::identity(1));
    } else {
      d.rep_intertwiners.push_back(extension_intertwiner(np, d.pi, r, opts.bound));
    }
  }
  // I^r pi(r^-1 n r) = pi(n) I^r
  for (std::size_t q = 0; q < qn; ++q) {
    int r = d.reps[q];
    for (int n : np.n.elements) {
      int c = G->mul(G->mul(G->inv(r), n), r);
      if (!(d.rep_intertwiners[q] * d.pi_at(c) == d.pi_at(n) * d.rep_intertwiners[q]))
        throw Error("intertwiner fails the equivariance condition");
    }
  }
  std::vector<RootOfUnity> vals(qn * qn);
  long m = 1;
  for (std::size_t a = 0; a < qn; ++a)
    for (std::size_t b = 0; b < qn; ++b) {
      int ga = d.reps[a], gb = d.reps[b];
      CycloMatrix prod = d.intertwiner(ga) * d.intertwiner(gb);
      CycloMatrix full = d.intertwiner(G->mul(ga, gb));
      std::size_t fi = 0, fj = 0;
      bool found = false;
      for (std::size_t i = 0; i < prod.rows() && !found; ++i)
        for (std::size_t j = 0; j < prod.cols() && !found; ++j)
          if (!prod(i, j).is_zero()) {
            fi = i;
            fj = j;
            found = true;
          }
      Cyclotomic k = full(fi, fj) / prod(fi, fj);
      if (!(full == k * prod)) throw Error("intertwiners are not proportional");
      auto root = as_root_of_unity(k);
      if (!root) throw Error("intertwiner cocycle value is not a root of unity: " + k.to_string());
      vals[a * qn + b] = *root;
      m = lcm_long(m, root->order);
    }
  std::vector<int> e;
  for (const auto& v : vals) e.push_back(static_cast<int>(v.exponent_in(m)));
  d.kappa = TwoCocycle::validated(d.quotient, static_cast<int>(m), std::move(e)).reduced();
  return d;
}

GroupHom quotient_inclusion(const CliffordDatum& d, const QuotientResult& gq) {
  std::vector<int> image;
  for (int r : d.reps) image.push_back(gq.projection(r));
  return make_hom(d.quotient, gq.group, std::move(image));
}

TGAIrrep cross_product_rep(const TGAIrrep& tau, const CliffordDatum& d, const TwoCocycle& natural, const QuotientResult& gq) {
  const GroupPtr& G = d.np.gamma;
  auto incl = quotient_inclusion(d, gq);
  TwoCocycle expected = pullback(natural, incl) * d.kappa;
  if (!(tau.cocycle == expected)) {
    std::string desc;
    for (std::size_t i = 0; i < expected.exponents().size(); ++i) desc += (i ? "," : "") + std::to_string(expected.exponents()[i]);
    throw ValidationError("tau is not a module over natural * kappa_pi; expected exponents mod " +
                          std::to_string(expected.m()) + ": [" + desc + "]");
  }
  TwoCocycle nat_g = pullback(natural, gq.projection);
  std::size_t n = G->order();
  std::vector<int> trans, coset(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != -1) continue;
    int t = static_cast<int>(trans.size());
    trans.push_back(static_cast<int>(x));
    for (int h : d.stabilizer.elements) coset[static_cast<std::size_t>(G->mul(static_cast<int>(x), h))] = t;
  }
  std::size_t k = trans.size(), w = tau.dim * d.pi.dim();
  bool with_matrices = tau.has_matrices();
  std::vector<CycloMatrix> inner(n);
  std::vector<Cyclotomic> inner_trace(n);
  for (int h : d.stabilizer.elements) {
    auto q = static_cast<std::size_t>(d.label[static_cast<std::size_t>(h)]);
    CycloMatrix ih = d.intertwiner(h);
    inner_trace[static_cast<std::size_t>(h)] = tau.traces[q] * ih.trace();
    if (with_matrices) inner[static_cast<std::size_t>(h)] = kronecker(tau.matrices[q], ih);
  }
  TGAIrrep out;
  out.cocycle = nat_g;
  out.dim = k * w;
  for (std::size_t g = 0; g < n; ++g) {
    int ig = static_cast<int>(g);
    CycloMatrix m;
    if (with_matrices) m = CycloMatrix(k * w, k * w);
    Cyclotomic tr;
    for (std::size_t j = 0; j < k; ++j) {
      int x = G->mul(ig, trans[j]);
      auto i = static_cast<std::size_t>(coset[static_cast<std::size_t>(x)]);
      int h = G->mul(G->inv(trans[i]), x);
      Cyclotomic c = nat_g.value(ig, trans[j]) / nat_g.value(trans[i], h);
      if (i == j) tr += c * inner_trace[static_cast<std::size_t>(h)];
      if (with_matrices) {
        const auto& b = inner[static_cast<std::size_t>(h)];
        for (std::size_t r = 0; r < w; ++r)
          for (std::size_t s = 0; s < w; ++s)
            if (!b(r, s).is_zero()) m(i * w + r, j * w + s) = c * b(r, s);
      }
    }
    out.traces.push_back(tr);
    if (with_matrices) out.matrices.push_back(std::move(m));
  }
  return out;
}

CliffordReport clifford_bijection(GroupPtr gamma, const SubgroupHandle& n, const std::optional<TwoCocycle>& natural_in,
                                  std::size_t bound) {
  auto gq = quotient(gamma, n);
  TwoCocycle natural = natural_in ? *natural_in : TwoCocycle::trivial(gq.group);
  if (natural.group()->order() != gq.group->order())
    throw ValidationError("cocycle must live on Gamma/N (order " + std::to_string(gq.group->order()) + ")");
  if (natural_in) natural = TwoCocycle::validated(gq.group, natural.m(), natural.exponents());
  TwoCocycle nat_g = pullback(natural, gq.projection);
  CliffordReport rep;
  rep.targets = twisted_irreps(nat_g, bound);
  auto np = NormalPair::make(gamma, n);
  const auto& nchars = np.n_characters();
  std::vector<char> seen(nchars.size(), 0);
  std::vector<int> hit(rep.targets.size(), 0);
  for (std::size_t i = 0; i < nchars.size(); ++i) {
    if (seen[i]) continue;
    auto os = orbit_and_stabilizer(np, static_cast<int>(i));
    for (int j : os.orbit) seen[static_cast<std::size_t>(j)] = 1;
    CliffordOptions opts;
    opts.bound = bound;
    auto d = intertwiner_cocycle(np, static_cast<int>(i), opts);
    rep.kappas.push_back(d.kappa);
    rep.kappa_trivial_class.push_back(cohomologous(d.kappa, TwoCocycle::trivial(d.quotient)).has_value());
    TwoCocycle c = pullback(natural, quotient_inclusion(d, gq)) * d.kappa;
    auto taus = twisted_irreps(c, bound);
    for (std::size_t t = 0; t < taus.size(); ++t) {
      auto mod = cross_product_rep(taus[t], d, natural, gq);
      int target = find_by_traces(rep.targets, mod.traces);
      if (target < 0) throw Error("tau x| pi is not irreducible over the twisted algebra");
      ++hit[static_cast<std::size_t>(target)];
      // Restriction to N must contain exactly the orbit of pi.
      Character res{np.n_group.group, {}};
      for (const auto& cls : np.n_group.group->classes()) res.values.push_back(mod.traces[static_cast<std::size_t>(np.n_group.embedding(cls.front()))]);
      for (std::size_t j = 0; j < nchars.size(); ++j) {
        bool in_orbit = std::binary_search(os.orbit.begin(), os.orbit.end(), static_cast<int>(j));
        if (inner_product(res, nchars[j]).is_zero() == in_orbit) throw Error("restriction of tau x| pi to N is not supported on the orbit");
      }
      rep.matches.push_back({os.orbit, static_cast<int>(t), mod.dim, target});
    }
    rep.orbits.push_back(std::move(os));
  }
  for (int h : hit)
    if (h != 1) throw Error("Clifford matching is not a bijection");
  std::size_t sum = 0;
  for (const auto& mt : rep.matches) sum += mt.dim * mt.dim;
  if (sum != gamma->order()) throw Error("Clifford matching dimensions do not square-sum to |Gamma|");
  return rep;
}

}  // namespace lpcusp
