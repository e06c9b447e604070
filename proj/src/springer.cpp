#include "lpcusp/springer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lpcusp/error.hpp"

namespace lpcusp {

Partition make_partition(std::vector<int> parts) {
  for (int p : parts)
    if (p <= 0) throw ValidationError("partition parts must be positive, got " + std::to_string(p));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

int total(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

namespace {

void gen_partitions(int rest, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(rest - p, p, cur, out);
    cur.pop_back();
  }
}

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int a : p) ++m[a];
  return m;
}

std::vector<int> distinct_parts(const Partition& p, int parity) {
  std::vector<int> out;
  for (const auto& [a, mult] : multiplicities(p))
    if (a % 2 == parity) out.push_back(a);
  return out;  // ascending
}

bool is_so_family(ClassicalType t) { return t == ClassicalType::SO_odd || t == ClassicalType::SO_even; }

void reject_spin(ClassicalType t) {
  if (t == ClassicalType::Spin || t == ClassicalType::HSpin)
    throw NotSupported(to_string(t) + ": cuspidal data for spin groups involve central characters of 2-power order and are not modelled");
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw ValidationError("partitions: n must be non-negative");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(n)];
}

long bipartition_count(int k) {
  long sum = 0;
  for (int j = 0; j <= k; ++j) sum += partition_count(j) * partition_count(k - j);
  return sum;
}

std::string to_string(ClassicalType t) {
  switch (t) {
    case ClassicalType::GL: return "GL";
    case ClassicalType::SLmod: return "SLmod";
    case ClassicalType::Sp: return "Sp";
    case ClassicalType::SO_odd: return "SO_odd";
    case ClassicalType::SO_even: return "SO_even";
    case ClassicalType::O: return "O";
    case ClassicalType::Spin: return "Spin";
    case ClassicalType::HSpin: return "HSpin";
  }
  return "?";
}

ClassicalType parse_classical_type(const std::string& s) {
  static const std::map<std::string, ClassicalType> names = {
      {"GL", ClassicalType::GL},         {"A", ClassicalType::GL},          {"SL", ClassicalType::SLmod},
      {"SLmod", ClassicalType::SLmod},   {"Sp", ClassicalType::Sp},         {"C", ClassicalType::Sp},
      {"SO_odd", ClassicalType::SO_odd}, {"B", ClassicalType::SO_odd},      {"SO_even", ClassicalType::SO_even},
      {"D", ClassicalType::SO_even},     {"O", ClassicalType::O},           {"Spin", ClassicalType::Spin},
      {"HSpin", ClassicalType::HSpin}};
  auto it = names.find(s);
  if (it == names.end()) throw ValidationError("unknown group type '" + s + "'");
  return it->second;
}

bool valid_partition(ClassicalType t, const Partition& p) {
  for (int a : p)
    if (a <= 0) return false;
  if (!std::is_sorted(p.begin(), p.end(), std::greater<>())) return false;
  int bad_parity = -1;
  if (t == ClassicalType::Sp) bad_parity = 1;
  if (t == ClassicalType::O || is_so_family(t) || t == ClassicalType::Spin || t == ClassicalType::HSpin) bad_parity = 0;
  if (bad_parity < 0) return true;
  for (const auto& [a, mult] : multiplicities(p))
    if (a % 2 == bad_parity && mult % 2 != 0) return false;
  return true;
}

std::vector<UnipotentClass> unipotent_classes(ClassicalType t, int n, int k) {
  if (n < 1) throw ValidationError("unipotent_classes: rank parameter must be at least 1");
  if (t == ClassicalType::SLmod && (k < 1 || n % k != 0)) throw ValidationError("SLmod(k) needs k dividing N");
  if (t == ClassicalType::Sp && n % 2 != 0) throw ValidationError("Sp needs even N");
  if (t == ClassicalType::SO_odd && n % 2 == 0) throw ValidationError("SO_odd needs odd N");
  if (t == ClassicalType::SO_even && n % 2 != 0) throw ValidationError("SO_even needs even N");
  std::vector<UnipotentClass> out;
  for (auto& p : partitions(n))
    if (valid_partition(t, p)) out.push_back({t, n, k, p});
  return out;
}

ComponentGroup component_group(ClassicalType t, const Partition& lambda_in, int k) {
  Partition lambda = make_partition(lambda_in);
  if (!valid_partition(t, lambda))
    throw ValidationError("partition " + to_string(lambda) + " is not a unipotent class of type " + to_string(t));
  reject_spin(t);
  ComponentGroup cg;
  auto finish_whole = [&] { cg.identity_part = whole_group(cg.group); };
  switch (t) {
    case ClassicalType::GL:
      cg.group = FiniteGroup::trivial();
      finish_whole();
      return cg;
    case ClassicalType::SLmod: {
      if (k < 1) throw ValidationError("SLmod needs k >= 1");
      int g = k;
      for (int a : lambda) g = std::gcd(g, a);
      cg.group = FiniteGroup::cyclic(g);
      if (g > 1) {
        cg.generators = {1};
        cg.generator_names = {"c"};
        cg.generator_parts = {{}};
      }
      finish_whole();
      return cg;
    }
    case ClassicalType::Sp: {
      auto parts = distinct_parts(lambda, 0);
      cg.group = FiniteGroup::elementary_abelian2(static_cast<int>(parts.size()));
      for (std::size_t i = 0; i < parts.size(); ++i) {
        cg.generators.push_back(1 << i);
        cg.generator_names.push_back("z" + std::to_string(parts[i]));
        cg.generator_parts.push_back({parts[i]});
      }
      finish_whole();
      return cg;
    }
    case ClassicalType::O: {
      auto parts = distinct_parts(lambda, 1);
      auto mult = multiplicities(lambda);
      cg.group = FiniteGroup::elementary_abelian2(static_cast<int>(parts.size()));
      std::vector<int> det_one;
      for (std::size_t mask = 0; mask < cg.group->order(); ++mask) {
        int odd = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (mask >> i & 1) odd += mult[parts[i]];
        if (odd % 2 == 0) det_one.push_back(static_cast<int>(mask));
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        cg.generators.push_back(1 << i);
        cg.generator_names.push_back("z" + std::to_string(parts[i]));
        cg.generator_parts.push_back({parts[i]});
      }
      cg.identity_part = make_subgroup(cg.group, det_one);
      return cg;
    }
    case ClassicalType::SO_odd:
    case ClassicalType::SO_even: {
      // Determinant-one part of the O-level group: z_a with even multiplicity, and products of
      // consecutive z_a with odd multiplicity.
      auto parts = distinct_parts(lambda, 1);
      auto mult = multiplicities(lambda);
      std::vector<std::vector<int>> basis;
      std::vector<int> odd_mult;
      for (int a : parts) {
        if (mult[a] % 2 == 0)
          basis.push_back({a});
        else
          odd_mult.push_back(a);
      }
      for (std::size_t i = 0; i + 1 < odd_mult.size(); ++i) basis.push_back({odd_mult[i], odd_mult[i + 1]});
      std::sort(basis.begin(), basis.end());
      cg.group = FiniteGroup::elementary_abelian2(static_cast<int>(basis.size()));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        cg.generators.push_back(1 << i);
        std::string name;
        for (int a : basis[i]) name += "z" + std::to_string(a);
        cg.generator_names.push_back(name);
        cg.generator_parts.push_back(basis[i]);
      }
      finish_whole();
      return cg;
    }
    default:
      break;
  }
  throw NotSupported("component group for " + to_string(t));
}

namespace {

Partition staircase(ClassicalType t, int d) {
  Partition p;
  for (int a = d; a >= 1; --a) p.push_back(t == ClassicalType::Sp ? 2 * a : 2 * a - 1);
  return p;
}

// Values of an O/Sp-level pattern (ascending z_a) on the generators of component_group(t, lambda).
SignPattern restrict_pattern(const ComponentGroup& cg, const std::vector<int>& parts, const SignPattern& signs) {
  SignPattern out;
  for (const auto& gp : cg.generator_parts) {
    int v = 1;
    for (int a : gp) {
      auto it = std::find(parts.begin(), parts.end(), a);
      v *= signs[static_cast<std::size_t>(it - parts.begin())];
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<CuspidalPair> cuspidal_pairs(ClassicalType t, int n, int k) {
  reject_spin(t);
  std::vector<CuspidalPair> out;
  switch (t) {
    case ClassicalType::GL:
      if (n == 1) out.push_back({t, 1, {1}, 0, {}, {}, 1});
      return out;
    case ClassicalType::SLmod:
      if (k == n && n >= 1) out.push_back({t, n, {n}, 0, {}, {}, n});
      return out;
    case ClassicalType::Sp: {
      for (int d = 1; d * (d + 1) <= n; ++d) {
        if (d * (d + 1) != n) continue;
        SignPattern s;
        for (int a = 1; a <= d; ++a) s.push_back(a % 2 ? -1 : 1);
        auto lambda = staircase(t, d);
        auto cg = component_group(t, lambda);
        out.push_back({t, n, lambda, d, s, restrict_pattern(cg, distinct_parts(lambda, 0), s), 1});
      }
      return out;
    }
    case ClassicalType::O:
    case ClassicalType::SO_odd:
    case ClassicalType::SO_even: {
      for (int d = 1; d * d <= n; ++d) {
        if (d * d != n) continue;
        if (t == ClassicalType::SO_odd && n % 2 == 0) continue;
        if (t == ClassicalType::SO_even && n % 2 != 0) continue;
        auto lambda = staircase(t, d);
        auto cg = component_group(t, lambda);
        auto parts = distinct_parts(lambda, 1);
        for (int shift = 0; shift < 2; ++shift) {
          SignPattern s;
          for (int a = 1; a <= d; ++a) s.push_back((a + shift) % 2 ? -1 : 1);
          out.push_back({t, n, lambda, d, s, restrict_pattern(cg, parts, s), 1});
        }
      }
      return out;
    }
    default:
      break;
  }
  return out;
}

bool is_cuspidal_pair(ClassicalType t, const Partition& lambda, const SignPattern& values) {
  for (const auto& cp : cuspidal_pairs(t, total(lambda)))
    if (cp.lambda == lambda && cp.restricted == values) return true;
  return false;
}

namespace {

std::string support_label(ClassicalType t, int k, int tail) {
  std::string s = "GL_1^" + std::to_string(k);
  if (tail > 0) s += " x " + to_string(t) + "_" + std::to_string(tail);
  return s;
}

// Distinct characters of A_G(u) (restricted values) among the cuspidal pairs on a tail of size n.
long cuspidal_count(ClassicalType t, int n) {
  if (n == 0) return 1;
  std::vector<SignPattern> seen;
  for (const auto& cp : cuspidal_pairs(t, n))
    if (std::find(seen.begin(), seen.end(), cp.restricted) == seen.end()) seen.push_back(cp.restricted);
  return static_cast<long>(seen.size());
}

// Tail sizes admitting a cuspidal pair (0 for the torus).
std::vector<int> cuspidal_levels(ClassicalType t, int n) {
  std::vector<int> out;
  if (t == ClassicalType::GL) return {0};
  for (int d = 0;; ++d) {
    int tail = t == ClassicalType::Sp ? d * (d + 1) : d * d;
    if (tail > n) break;
    if ((n - tail) % 2 != 0) continue;
    if (t == ClassicalType::SO_odd && tail == 0) continue;
    if (cuspidal_count(t, tail) > 0) out.push_back(tail);
  }
  return out;
}

}  // namespace

CensusResult census(ClassicalType t, int n) {
  reject_spin(t);
  if (t != ClassicalType::GL && t != ClassicalType::Sp && t != ClassicalType::SO_odd)
    throw ValidationError("census supports GL, Sp and SO_odd, not " + to_string(t));
  CensusResult r;
  r.type = t;
  r.n = n;
  for (const auto& uc : unipotent_classes(t, n)) {
    auto cg = component_group(t, uc.lambda);
    long v = static_cast<long>(cg.group->classes().size());
    r.lhs_terms.push_back({to_string(uc.lambda), v});
    r.lhs += v;
  }
  if (t == ClassicalType::GL) {
    long v = partition_count(n);
    r.rhs_terms.push_back({support_label(t, n, 0) + " : |Irr S_" + std::to_string(n) + "|", v});
    r.rhs = v;
    return r;
  }
  for (int tail : cuspidal_levels(t, n)) {
    int k = (n - tail) / 2;
    long pairs = cuspidal_count(t, tail);
    long v = pairs * bipartition_count(k);
    std::string w = (t == ClassicalType::Sp ? "C" : "B") + std::to_string(k);
    r.rhs_terms.push_back({support_label(t, k, tail) + " : " + std::to_string(pairs) + " x |Irr W(" + w + ")|", v});
    r.rhs += v;
  }
  return r;
}

SectionCocycle cocycle_from_section(const SectionDatum& d) {
  if (!is_normal(*d.ambient, d.normal.elements)) throw ValidationError("section datum: subgroup is not normal");
  SectionCocycle sc;
  sc.quotient = quotient(d.ambient, d.normal);
  const auto& qg = sc.quotient.group;
  std::size_t nq = qg->order();
  if (d.representatives.size() != nq)
    throw ValidationError("section datum: need " + std::to_string(nq) + " representatives, got " +
                          std::to_string(d.representatives.size()));
  sc.section.assign(nq, -1);
  for (int r : d.representatives) {
    if (r < 0 || static_cast<std::size_t>(r) >= d.ambient->order()) throw ValidationError("section datum: element out of range");
    auto q = static_cast<std::size_t>(sc.quotient.projection(r));
    if (sc.section[q] != -1) throw ValidationError("section datum: two representatives in coset " + std::to_string(q));
    sc.section[q] = r;
  }
  if (d.eps.group()->order() != d.normal.order()) throw ValidationError("section datum: eps must be a representation of the normal subgroup");
  const FiniteGroup& G = *d.ambient;
  std::vector<RootOfUnity> vals(nq * nq);
  long m = 1;
  for (std::size_t a = 0; a < nq; ++a)
    for (std::size_t b = 0; b < nq; ++b) {
      int ab = qg->mul(static_cast<int>(a), static_cast<int>(b));
      int x = G.mul(G.mul(sc.section[a], sc.section[b]), G.inv(sc.section[static_cast<std::size_t>(ab)]));
      const CycloMatrix& mat = d.eps(d.normal.position(x));
      auto root = mat.is_scalar() ? as_root_of_unity(mat(0, 0)) : std::nullopt;
      if (!root)
        throw ValidationError("eps does not act by a root-of-unity scalar on s(a)s(b)s(ab)^-1 for the coset pair (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
      vals[a * nq + b] = *root;
      m = lcm_long(m, root->order);
    }
  std::vector<int> e;
  for (const auto& v : vals) e.push_back(static_cast<int>(v.exponent_in(m)));
  sc.natural = TwoCocycle::validated(qg, static_cast<int>(m), std::move(e)).reduced();
  return sc;
}

SectionCocycleCheck compare_section_cocycles(const SectionDatum& d) {
  auto sc = cocycle_from_section(d);
  auto np = NormalPair::make(d.ambient, d.normal);
  int idx = irrep_index_of(np, d.eps);
  auto first = intertwiner_cocycle(np, idx);
  CliffordOptions opts;
  for (int r : first.reps) opts.section.push_back(sc.section[static_cast<std::size_t>(sc.quotient.projection(r))]);
  auto datum = intertwiner_cocycle(np, idx, opts);
  SectionCocycleCheck rep;
  rep.kappa = datum.kappa;
  rep.natural = pullback(sc.natural, quotient_inclusion(datum, sc.quotient));
  auto trivial = TwoCocycle::trivial(datum.quotient);
  rep.kappa_trivial = cohomologous(rep.kappa, trivial).has_value();
  rep.natural_trivial = cohomologous(rep.natural, trivial).has_value();
  rep.matches_inverse = cohomologous(rep.kappa, rep.natural.inverse()).has_value();
  rep.matches_direct = cohomologous(rep.kappa, rep.natural).has_value();
  return rep;
}

GroupPtr hyperoctahedral(int k, bool even) {
  if (k < 0) throw ValidationError("hyperoctahedral: negative rank");
  if (k == 0 || (even && k == 1)) return FiniteGroup::trivial();
  auto n = static_cast<std::size_t>(2 * k);
  auto ident = [&] {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < k; ++i) {
    Perm p = ident();
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
    std::swap(p[static_cast<std::size_t>(k + i)], p[static_cast<std::size_t>(k + i + 1)]);
    gens.push_back(p);
  }
  Perm s = ident();
  if (even) {
    // e_{k-1} <-> -e_k
    auto a = static_cast<std::size_t>(k - 2), b = static_cast<std::size_t>(k - 1), ka = a + static_cast<std::size_t>(k),
         kb = b + static_cast<std::size_t>(k);
    s[a] = static_cast<int>(kb);
    s[kb] = static_cast<int>(a);
    s[b] = static_cast<int>(ka);
    s[ka] = static_cast<int>(b);
  } else {
    std::swap(s[static_cast<std::size_t>(k - 1)], s[static_cast<std::size_t>(2 * k - 1)]);
  }
  gens.push_back(s);
  return FiniteGroup::from_perms(gens);
}

WeylDatum weyl_datum(ClassicalType ambient, int ambient_n, int k, int tail_n) {
  reject_spin(ambient);
  if (k < 0 || tail_n < 0) throw ValidationError("weyl_datum: negative sizes");
  auto fail = [&] {
    throw ValidationError("GL_1^" + std::to_string(k) + " x " + to_string(ambient) + "_" + std::to_string(tail_n) +
                          " does not embed as a Levi of " + to_string(ambient) + "_" + std::to_string(ambient_n));
  };
  WeylDatum w;
  w.rank = k;
  bool disconnected = false;
  if (ambient == ClassicalType::GL || ambient == ClassicalType::SLmod) {
    if (k + tail_n != ambient_n) fail();
    int letters = tail_n == 1 ? k + 1 : k;
    w.type = "A";
    w.rank = std::max(letters - 1, 0);
    w.w_t = letters <= 1 ? FiniteGroup::trivial() : FiniteGroup::symmetric(letters);
  } else {
    if (2 * k + tail_n != ambient_n) fail();
    bool even_d = false;
    switch (ambient) {
      case ClassicalType::Sp:
        if (tail_n % 2 != 0) fail();
        w.type = "C";
        break;
      case ClassicalType::SO_odd:
        if (tail_n % 2 != 1) fail();
        w.type = "B";
        break;
      case ClassicalType::SO_even:
        if (tail_n % 2 != 0) fail();
        w.type = tail_n == 0 ? "D" : "B";
        even_d = tail_n == 0;
        break;
      case ClassicalType::O:
        if (tail_n % 2 != 0) fail();
        w.type = tail_n == 0 ? "D" : "B";
        disconnected = tail_n == 0 && k >= 1;
        break;
      default:
        fail();
    }
    w.w_t = hyperoctahedral(k, even_d);
  }
  if (k == 0) w.type = "1";
  if (disconnected) {
    // W(D_k) inside W(B_k), complemented by the sign change of the last coordinate.
    auto d = hyperoctahedral(k, true);
    std::vector<int> gens;
    for (const auto& p : d->perms()) {
      auto idx = w.w_t->find_perm(p);
      if (!idx) throw Error("W(D_k) element missing from W(B_k)");
      gens.push_back(*idx);
    }
    w.w_circ_in_t = k == 1 ? trivial_subgroup(w.w_t) : generated_subgroup(w.w_t, gens);
    w.w_circ = as_group(w.w_circ_in_t).group;
    Perm flip(static_cast<std::size_t>(2 * k));
    std::iota(flip.begin(), flip.end(), 0);
    std::swap(flip[static_cast<std::size_t>(k - 1)], flip[static_cast<std::size_t>(2 * k - 1)]);
    w.complement = {0, *w.w_t->find_perm(flip)};
  } else {
    w.w_circ = w.w_t;
    w.w_circ_in_t = whole_group(w.w_t);
    w.complement = {0};
  }
  return w;
}

std::optional<SpringerEntry> SpringerTable::lookup(const Partition& lambda, const SignPattern& eta) const {
  for (const auto& e : entries)
    if (e.lambda == lambda && e.eta == eta) return e;
  return std::nullopt;
}

SpringerTable builtin_springer_table(ClassicalType t, int n) {
  reject_spin(t);
  SpringerTable table;
  table.type = t;
  table.n = n;
  if (t != ClassicalType::GL && t != ClassicalType::Sp && t != ClassicalType::SO_odd && t != ClassicalType::SO_even)
    return table;
  auto level_pair = [&](int tail) -> std::pair<Partition, SignPattern> {
    if (tail == 0) return {{}, {}};
    auto cps = cuspidal_pairs(t, tail);
    return {cps.front().lambda, cps.front().restricted};
  };
  std::vector<int> levels = cuspidal_levels(t, n);
  std::vector<int> lower;
  for (int tail : levels)
    if (tail != n) lower.push_back(tail);
  for (const auto& uc : unipotent_classes(t, n)) {
    auto cg = component_group(t, uc.lambda);
    std::size_t r = cg.generators.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      SignPattern eta;
      for (std::size_t i = 0; i < r; ++i) eta.push_back(mask >> i & 1 ? -1 : 1);
      if (t != ClassicalType::GL && is_cuspidal_pair(t, uc.lambda, eta)) {
        table.entries.push_back({uc.lambda, eta, 0, uc.lambda, eta});
      } else if (lower.size() == 1) {
        auto [v, s] = level_pair(lower.front());
        table.entries.push_back({uc.lambda, eta, (n - lower.front()) / (t == ClassicalType::GL ? 1 : 2), v, s});
      }
    }
  }
  return table;
}

}  // namespace lpcusp
