#include "lpcusp/lparams.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "lpcusp/error.hpp"

namespace lpcusp {

std::string to_string(Duality d) {
  switch (d) {
    case Duality::Orth: return "orth";
    case Duality::Symp: return "symp";
    case Duality::ConjOrth: return "conj-orth";
    case Duality::ConjSymp: return "conj-symp";
    case Duality::None: return "none";
  }
  return "none";
}

Duality parse_duality(const std::string& s) {
  if (s == "orth" || s == "orthogonal") return Duality::Orth;
  if (s == "symp" || s == "symplectic") return Duality::Symp;
  if (s == "conj-orth") return Duality::ConjOrth;
  if (s == "conj-symp") return Duality::ConjSymp;
  if (s == "none" || s.empty()) return Duality::None;
  throw ValidationError("unknown duality '" + s + "'");
}

bool operator<(const Twist& a, const Twist& b) {
  if (a.s != b.s) return a.s < b.s;
  if (a.zeta.order != b.zeta.order) return a.zeta.order < b.zeta.order;
  return a.zeta.exponent < b.zeta.exponent;
}

std::string to_string(const Twist& t) {
  std::string out = to_string(t.s);
  if (t.zeta.exponent != 0) out += ";z(" + std::to_string(t.zeta.order) + ")^" + std::to_string(t.zeta.exponent);
  return out;
}

std::string to_string(GroupKindL k) {
  switch (k) {
    case GroupKindL::GLinner: return "GLinner";
    case GroupKindL::Sp: return "Sp";
    case GroupKindL::SOodd: return "SO_odd";
    case GroupKindL::SOeven: return "SO_even";
    case GroupKindL::U: return "U";
  }
  return "?";
}

int GroupDescriptor::dual_dim() const {
  switch (kind) {
    case GroupKindL::Sp: return n + 1;
    case GroupKindL::SOodd: return n - 1;
    default: return n;
  }
}

namespace {

bool orth_target(GroupKindL k) { return k == GroupKindL::Sp || k == GroupKindL::SOeven; }

/// Key identifying a label: the core, plus the twist when it is nonzero.
std::string label_key(const WeilLabel& l) { return l.twist.is_zero() ? l.core : l.core + "|" + to_string(l.twist); }

std::string block_name(const Block& b) { return label_key(b.label) + " x S_" + std::to_string(b.a); }

/// Type of the centralizer factor carried by a label; throws when the duality is impossible for the group.
ClassicalType factor_type(GroupKindL k, const WeilLabel& l) {
  if (k == GroupKindL::GLinner || l.duality == Duality::None) return ClassicalType::GL;
  if (k == GroupKindL::U) {
    if (l.duality == Duality::ConjOrth) return ClassicalType::O;
    if (l.duality == Duality::ConjSymp) return ClassicalType::Sp;
    throw ValidationError("label " + label_key(l) + ": unitary groups need conj-orth, conj-symp or none");
  }
  if (l.duality == Duality::Orth) return orth_target(k) ? ClassicalType::O : ClassicalType::Sp;
  if (l.duality == Duality::Symp) return orth_target(k) ? ClassicalType::Sp : ClassicalType::O;
  throw ValidationError("label " + label_key(l) + ": conjugate-duality labels only occur for unitary groups");
}

void check_group(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKindL::GLinner:
      if (g.n < 1 || g.d < 1 || g.n % g.d != 0) throw ValidationError("GLinner needs n >= 1 and d dividing n");
      break;
    case GroupKindL::Sp:
      if (g.n < 0 || g.n % 2 != 0) throw ValidationError("Sp needs even n");
      break;
    case GroupKindL::SOodd:
      if (g.n < 1 || g.n % 2 != 1) throw ValidationError("SO_odd needs odd n");
      break;
    case GroupKindL::SOeven:
      if (g.n < 0 || g.n % 2 != 0) throw ValidationError("SO_even needs even n");
      break;
    case GroupKindL::U:
      if (g.n < 1) throw ValidationError("U needs n >= 1");
      break;
  }
}

struct Factor {
  WeilLabel label;
  ClassicalType type;
  std::vector<std::pair<int, int>> parts;  // (a, mult), ascending a
};

std::vector<Factor> factors_of(const LParameter& v) {
  std::vector<Factor> out;
  for (const auto& b : v.blocks) {
    if (out.empty() || !same_label(out.back().label, b.label))
      out.push_back({b.label, factor_type(v.group.kind, b.label), {}});
    out.back().parts.emplace_back(b.a, b.mult);
  }
  return out;
}

Partition lambda_of(const Factor& f) {
  Partition p;
  for (auto [a, m] : f.parts) p.insert(p.end(), static_cast<std::size_t>(m), a);
  return make_partition(std::move(p));
}

/// Order of zeta_g^j.
long order_in(long j, long g) {
  j = mod_floor(j, g);
  return j == 0 ? 1 : g / gcd_long(j, g);
}

}  // namespace

LParameter validate(const LParameter& phi) {
  check_group(phi.group);
  std::map<std::string, WeilLabel> labels;
  std::map<std::pair<std::string, int>, Block> merged;
  for (const auto& b : phi.blocks) {
    if (b.label.core.empty()) throw ValidationError("block with empty core");
    if (b.label.dim < 1 || b.a < 1 || b.mult < 1) throw ValidationError("block " + block_name(b) + ": dim, a and mult must be positive");
    auto key = label_key(b.label);
    auto [it, fresh] = labels.emplace(key, b.label);
    if (!fresh && (it->second.dim != b.label.dim || it->second.duality != b.label.duality))
      throw ValidationError("label " + key + " appears with different dim or duality");
    if (phi.group.kind != GroupKindL::GLinner && factor_type(phi.group.kind, b.label) != ClassicalType::GL &&
        (sgn(b.label.twist.s) != 0 || b.label.twist.zeta.order > 2))
      throw ValidationError("block " + block_name(b) + ": a self-dual label cannot carry a non-quadratic twist");
    auto [m, added] = merged.emplace(std::make_pair(key, b.a), b);
    if (!added) m->second.mult += b.mult;
  }
  LParameter out{phi.group, {}};
  long size = 0;
  for (auto& [k, b] : merged) {
    bool doubled = phi.group.kind != GroupKindL::GLinner && b.label.duality == Duality::None;
    size += static_cast<long>(b.label.dim) * b.a * b.mult * (doubled ? 2 : 1);
    out.blocks.push_back(b);
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& x, const Block& y) {
    if (x.label.core != y.label.core) return x.label.core < y.label.core;
    if (!(x.label.twist == y.label.twist)) return x.label.twist < y.label.twist;
    return x.a < y.a;
  });
  if (size != phi.group.dual_dim())
    throw ValidationError("blocks have total dimension " + std::to_string(size) + " but the dual group needs " +
                          std::to_string(phi.group.dual_dim()));
  for (const auto& f : factors_of(out)) {
    if (f.type == ClassicalType::GL) continue;
    if (!valid_partition(f.type, lambda_of(f)))
      throw ValidationError("parity violation for label " + label_key(f.label) + ": Jordan type " + to_string(lambda_of(f)) +
                            " is not valid for " + to_string(f.type));
  }
  return out;
}

std::vector<CentralizerFactor> centralizer_factors(const LParameter& phi) {
  auto v = validate(phi);
  std::vector<CentralizerFactor> out;
  for (const auto& f : factors_of(v)) out.push_back({label_key(f.label), f.type, f.label.dim, lambda_of(f)});
  return out;
}

ComponentGroupTower s_group(const LParameter& phi) {
  auto v = validate(phi);
  ComponentGroupTower t;
  if (v.group.kind == GroupKindL::GLinner) {
    long g = 0;
    for (const auto& b : v.blocks) g = gcd_long(g, b.a);
    t.cyclic_order = static_cast<int>(g);
    t.s_group = FiniteGroup::cyclic(t.cyclic_order);
    if (g > 1) {
      t.generator_names.emplace_back("", 0);
      t.generators.push_back(1);
    }
    t.z_group = whole_group(t.s_group);
    t.r_group = quotient(t.s_group, t.z_group);
    return t;
  }
  std::vector<long> weight;
  for (const auto& f : factors_of(v)) {
    if (f.type == ClassicalType::GL) continue;
    int parity = f.type == ClassicalType::O ? 1 : 0;
    for (auto [a, m] : f.parts)
      if (a % 2 == parity) {
        t.generator_names.emplace_back(label_key(f.label), a);
        weight.push_back(static_cast<long>(f.label.dim) * a * m);
      }
  }
  int r = static_cast<int>(t.generator_names.size());
  if (r > 12) throw BoundExceeded("component group (Z/2)^" + std::to_string(r) + " exceeds the table limit");
  auto ambient = FiniteGroup::elementary_abelian2(r);
  if (orth_target(v.group.kind)) {
    std::vector<int> kernel;
    for (int mask = 0; mask < (1 << r); ++mask) {
      long w = 0;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) w += weight[static_cast<std::size_t>(i)];
      if (w % 2 == 0) kernel.push_back(mask);
    }
    t.s_group = as_group(make_subgroup(ambient, kernel)).group;
    t.masks = kernel;
  } else {
    t.s_group = ambient;
    t.masks.resize(static_cast<std::size_t>(1) << r);
    std::iota(t.masks.begin(), t.masks.end(), 0);
  }
  t.generators = t.s_group->generators();
  t.z_group = trivial_subgroup(t.s_group);
  t.r_group = quotient(t.s_group, t.z_group);
  return t;
}

namespace {

void check_enhancement(const ComponentGroupTower& t, const Enhancement& rho) {
  for (const auto& [key, v] : rho.signs) {
    if (v != 1 && v != -1) throw ValidationError("enhancement sign for z:" + key.first + ":" + std::to_string(key.second) + " must be +1 or -1");
    if (std::find(t.generator_names.begin(), t.generator_names.end(), key) == t.generator_names.end())
      throw ValidationError("enhancement names z:" + key.first + ":" + std::to_string(key.second) + ", which is not a generator of S_phi");
  }
}

int sign_of(const Enhancement& rho, const std::pair<std::string, int>& key) {
  auto it = rho.signs.find(key);
  return it == rho.signs.end() ? 1 : it->second;
}

/// Values on component_group(type, lambda).generators of the character with the given z_a signs.
SignPattern generator_values(ClassicalType type, const Partition& lambda, const std::function<int(int)>& sign_at) {
  auto cg = component_group(type, lambda);
  SignPattern out;
  for (const auto& parts : cg.generator_parts) {
    int v = 1;
    for (int a : parts) v *= sign_at(a);
    out.push_back(v);
  }
  return out;
}

}  // namespace

bool is_discrete(const LParameter& phi) {
  auto v = validate(phi);
  if (v.group.kind == GroupKindL::GLinner) return v.blocks.size() == 1 && v.blocks[0].mult == 1;
  return std::all_of(v.blocks.begin(), v.blocks.end(), [](const Block& b) { return b.mult == 1 && b.label.duality != Duality::None; });
}

bool is_bounded(const LParameter& phi) {
  return std::all_of(phi.blocks.begin(), phi.blocks.end(), [](const Block& b) { return sgn(b.label.twist.s) == 0; });
}

RootOfUnity character_value(const ComponentGroupTower& t, const Enhancement& rho, int element) {
  if (element < 0 || static_cast<std::size_t>(element) >= t.s_group->order()) throw ValidationError("element is not in S_phi");
  if (t.masks.empty()) return RootOfUnity(t.cyclic_order, rho.cyclic * element);
  int mask = t.masks[static_cast<std::size_t>(element)], v = 1;
  for (std::size_t i = 0; i < t.generator_names.size(); ++i)
    if (mask >> i & 1) v *= sign_of(rho, t.generator_names[i]);
  return v == 1 ? RootOfUnity() : RootOfUnity(2, 1);
}

RootOfUnity central_character(const LParameter& phi, const Enhancement& rho) {
  if (phi.group.kind != GroupKindL::GLinner) return {};
  auto t = s_group(phi);
  return RootOfUnity(t.cyclic_order, rho.cyclic);
}

bool is_relevant(const EnhancedParameter& p, const std::optional<RootOfUnity>& zeta) {
  if (p.phi.group.kind != GroupKindL::GLinner) return !zeta || zeta->exponent == 0;
  auto z = central_character(p.phi, p.rho);
  if (zeta) return z == RootOfUnity(zeta->order, zeta->exponent);
  return z.order == p.phi.group.d;
}

bool is_cuspidal(const EnhancedParameter& p) {
  auto v = validate(p.phi);
  auto t = s_group(v);
  check_enhancement(t, p.rho);
  if (!is_discrete(v) || !is_relevant({v, p.rho})) return false;
  if (v.group.kind == GroupKindL::GLinner) {
    int a = v.blocks[0].a;
    return order_in(p.rho.cyclic, a) == a;
  }
  auto fs = factors_of(v);
  auto all_ok = [&](const std::function<int(const std::string&, int)>& sign) {
    for (const auto& f : fs) {
      auto key = label_key(f.label);
      auto vals = generator_values(f.type, lambda_of(f), [&](int a) { return sign(key, a); });
      if (!is_cuspidal_pair(f.type, lambda_of(f), vals)) return false;
    }
    return true;
  };
  if (all_ok([&](const std::string& k, int a) { return sign_of(p.rho, {k, a}); })) return true;
  if (!orth_target(v.group.kind)) return false;
  // rho is a character of the det-one part; also try its other extension rho * det.
  std::map<std::pair<std::string, int>, int> weight;
  for (const auto& b : v.blocks) weight[{label_key(b.label), b.a}] = b.label.dim * b.a * b.mult;
  return all_ok([&](const std::string& k, int a) { return sign_of(p.rho, {k, a}) * (weight[{k, a}] % 2 ? -1 : 1); });
}

namespace {

/// GL part of the cuspidal support for one block: a/e copies of label (x) S_e with the torus offsets.
void split_block(const Block& b, int e, std::vector<Block>& out, std::vector<int>& levi) {
  for (int i = 0; i < b.a / e; ++i) {
    Block c = b;
    c.a = e;
    c.mult = 1;
    c.label.twist.s += frac(b.a - e, 2) - Rational(i * e);
    for (int m = 0; m < b.mult; ++m) {
      out.push_back(c);
      levi.push_back(b.label.dim * e);
    }
  }
}

/// Natural size of the classical group whose dual has natural dimension dual_n.
int natural_size(GroupKindL k, int dual_n) {
  switch (k) {
    case GroupKindL::Sp: return dual_n - 1;
    case GroupKindL::SOodd: return dual_n + 1;
    default: return dual_n;
  }
}

std::vector<int> eigenvalues(const Partition& p) {
  std::vector<int> out;
  for (int a : p)
    for (int i = 0; i < a; ++i) out.push_back(a - 1 - 2 * i);
  std::sort(out.begin(), out.end());
  return out;
}

ClassicalType table_type(ClassicalType factor, int m) {
  if (factor == ClassicalType::Sp) return ClassicalType::Sp;
  return m % 2 ? ClassicalType::SO_odd : ClassicalType::SO_even;
}

}  // namespace

CuspidalDatum cuspidal_support(const EnhancedParameter& p, const std::vector<SpringerTable>& tables) {
  auto v = validate(p.phi);
  auto t = s_group(v);
  check_enhancement(t, p.rho);
  CuspidalDatum cd;
  cd.group = v.group;
  if (v.group.kind == GroupKindL::GLinner) {
    long g = t.cyclic_order, j = mod_floor(p.rho.cyclic, g);
    int e = static_cast<int>(order_in(j, g));
    std::vector<Block> blocks;
    for (const auto& b : v.blocks) split_block(b, e, blocks, cd.levi);
    cd.on_levi.phi = {v.group, blocks};
    cd.on_levi.rho.cyclic = j * e / g;
    return cd;
  }
  if (is_cuspidal({v, p.rho})) {
    cd.tail_n = v.group.dual_dim();
    cd.on_levi = {v, p.rho};
    return cd;
  }
  std::vector<Block> gl, tail;
  for (const auto& f : factors_of(v)) {
    auto key = label_key(f.label);
    if (f.type == ClassicalType::GL) {
      for (auto [a, m] : f.parts) split_block({f.label, a, m}, 1, gl, cd.levi);
      continue;
    }
    auto lambda = lambda_of(f);
    int m = total(lambda);
    auto tt = table_type(f.type, m);
    auto eta = generator_values(tt, lambda, [&](int a) { return sign_of(p.rho, {key, a}); });
    std::optional<SpringerEntry> entry;
    for (const auto& tab : tables)
      if (tab.type == tt && tab.n == m && (entry = tab.lookup(lambda, eta))) break;
    if (!entry) entry = builtin_springer_table(tt, m).lookup(lambda, eta);
    if (!entry)
      throw NotSupported("no generalized Springer entry for factor " + key + " (" + to_string(tt) + " " + std::to_string(m) +
                         ", lambda " + to_string(lambda) + "); supply a table");
    // GL_1 factors: half the positive h-eigenvalues of lambda not accounted for by the tail.
    auto all = eigenvalues(lambda), rest = eigenvalues(entry->tail_v);
    std::vector<int> diff;
    std::set_difference(all.begin(), all.end(), rest.begin(), rest.end(), std::back_inserter(diff));
    std::vector<int> halves;
    int zeros = 0;
    for (int x : diff) {
      if (x > 0) halves.push_back(x);
      if (x == 0) ++zeros;
    }
    halves.insert(halves.end(), static_cast<std::size_t>(zeros / 2), 0);
    if (static_cast<int>(halves.size()) != entry->gl_count || static_cast<int>(diff.size()) != 2 * entry->gl_count)
      throw Error("Springer entry for " + key + " is inconsistent with the Jordan types");
    std::sort(halves.rbegin(), halves.rend());
    for (int x : halves) {
      Block b{f.label, 1, 1};
      b.label.twist.s += frac(x, 2);
      gl.push_back(b);
      cd.levi.push_back(f.label.dim);
    }
    // Tail signs on z_b. For O factors choose the lift keeping the value on -1 = prod z_a.
    std::map<int, int> tmult;
    for (int b : entry->tail_v) ++tmult[b];
    std::vector<int> zs;
    int parity = f.type == ClassicalType::O ? 1 : 0;
    for (auto [b, c] : tmult) {
      tail.push_back({f.label, b, c});
      if (b % 2 == parity) zs.push_back(b);
    }
    int central = 1;
    for (auto [a, c] : f.parts)
      if (f.type == ClassicalType::O && a % 2 == 1) central *= sign_of(p.rho, {key, a});
    std::optional<int> pick;
    auto sign_in = [&](int mask, int b) {
      auto pos = std::find(zs.begin(), zs.end(), b) - zs.begin();
      return mask >> pos & 1 ? -1 : 1;
    };
    for (int mask = 0; mask < (1 << zs.size()) && !pick; ++mask) {
      if (generator_values(table_type(f.type, total(entry->tail_v)), entry->tail_v, [&](int b) { return sign_in(mask, b); }) !=
          entry->tail_signs)
        continue;
      int c = 1;
      for (int b : zs) c *= sign_in(mask, b);
      if (f.type != ClassicalType::O || c == central || zs.empty()) pick = mask;
    }
    if (!pick && !zs.empty()) pick = 0;
    for (int b : zs)
      if (sign_in(*pick, b) == -1) cd.on_levi.rho.signs[{key, b}] = -1;
  }
  for (const auto& b : tail) cd.tail_n += b.label.dim * b.a * b.mult;
  cd.on_levi.phi.group = v.group;
  cd.on_levi.phi.blocks = gl;
  cd.on_levi.phi.blocks.insert(cd.on_levi.phi.blocks.end(), tail.begin(), tail.end());
  return cd;
}

bool is_cuspidal_datum(const CuspidalDatum& cd) {
  const auto& blocks = cd.on_levi.phi.blocks;
  if (blocks.size() < cd.levi.size()) return false;
  if (cd.group.kind == GroupKindL::GLinner) {
    if (blocks.empty()) return true;
    int e = blocks[0].a;
    for (const auto& b : blocks) {
      if (b.a != e || b.mult != 1) return false;
      EnhancedParameter f{{{GroupKindL::GLinner, b.label.dim * e, e}, {b}}, {{}, cd.on_levi.rho.cyclic}};
      if (!is_cuspidal(f)) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < cd.levi.size(); ++i)
    if (blocks[i].a != 1) return false;
  if (cd.tail_n == 0) return blocks.size() == cd.levi.size();
  EnhancedParameter tail{{{cd.group.kind, natural_size(cd.group.kind, cd.tail_n), 1},
                          {blocks.begin() + static_cast<long>(cd.levi.size()), blocks.end()}},
                         cd.on_levi.rho};
  return is_cuspidal(tail);
}

std::vector<std::tuple<std::string, int, Rational, RootOfUnity>> infinitesimal_multiset(const LParameter& phi) {
  std::vector<std::tuple<std::string, int, Rational, RootOfUnity>> out;
  for (const auto& b : phi.blocks)
    for (int m = 0; m < b.mult; ++m)
      for (int i = 0; i < b.a; ++i)
        out.emplace_back(b.label.core, b.label.dim, b.label.twist.s + frac(b.a - 1 - 2 * i, 2), b.label.twist.zeta);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const auto& [c1, d1, s1, z1] = x;
    const auto& [c2, d2, s2, z2] = y;
    return std::tie(c1, d1, s1, z1.order, z1.exponent) < std::tie(c2, d2, s2, z2.order, z2.exponent);
  });
  return out;
}

StandardTriple standard_triple(const EnhancedParameter& p) {
  auto v = validate(p.phi);
  if (v.group.kind != GroupKindL::GLinner) throw NotSupported("standard triples are implemented for GLinner");
  check_enhancement(s_group(v), p.rho);
  StandardTriple st;
  st.group = v.group;
  st.rho = p.rho;
  std::set<Rational, std::greater<>> values;
  for (const auto& b : v.blocks) values.insert(b.label.twist.s);
  for (const auto& s : values) {
    LParameter f{{GroupKindL::GLinner, 0, 1}, {}};
    for (auto b : v.blocks)
      if (b.label.twist.s == s) {
        f.group.n += b.label.dim * b.a * b.mult;
        b.label.twist.s = 0;
        f.blocks.push_back(b);
      }
    st.levi.push_back(f.group.n);
    st.z.push_back(s);
    st.bounded.push_back(validate(f));
  }
  return st;
}

EnhancedParameter assemble(const StandardTriple& st) {
  if (st.z.size() != st.bounded.size()) throw ValidationError("standard triple: one z value per Levi factor");
  for (std::size_t i = 0; i + 1 < st.z.size(); ++i)
    if (!(st.z[i] > st.z[i + 1])) throw ValidationError("standard triple: z must be strictly decreasing");
  LParameter phi{st.group, {}};
  for (std::size_t i = 0; i < st.bounded.size(); ++i) {
    if (!is_bounded(st.bounded[i])) throw ValidationError("standard triple: Levi factor " + std::to_string(i) + " is not bounded");
    for (auto b : st.bounded[i].blocks) {
      b.label.twist.s += st.z[i];
      phi.blocks.push_back(b);
    }
  }
  return {validate(phi), st.rho};
}

std::vector<EnhancedParameter> standard_triple_factors(const StandardTriple& st) {
  long g = 0;
  for (const auto& f : st.bounded)
    for (const auto& b : f.blocks) g = gcd_long(g, b.a);
  std::vector<EnhancedParameter> out;
  for (const auto& f : st.bounded) {
    long gi = 0;
    for (const auto& b : f.blocks) gi = gcd_long(gi, b.a);
    out.push_back({f, {{}, mod_floor(st.rho.cyclic, g) * (gi / g)}});
  }
  return out;
}

namespace {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

InertialClass inertial_class(const CuspidalDatum& cd) {
  InertialClass ic;
  ic.group = cd.group;
  const auto& blocks = cd.on_levi.phi.blocks;
  bool type_a = cd.group.kind == GroupKindL::GLinner;
  std::size_t k = type_a ? blocks.size() : cd.levi.size();
  for (std::size_t i = 0; i < k; ++i)
    for (int m = 0; m < blocks[i].mult; ++m)
      ic.factors.push_back({blocks[i].label.core, blocks[i].label.dim, blocks[i].a, type_a ? Duality::None : blocks[i].label.duality});
  std::sort(ic.factors.begin(), ic.factors.end());
  k = ic.factors.size();
  if (type_a) {
    int e = k ? ic.factors[0].a : 1;
    ic.cyclic = mod_floor(cd.on_levi.rho.cyclic, e);
  } else {
    for (std::size_t i = cd.levi.size(); i < blocks.size(); ++i) {
      Block b = blocks[i];
      b.label.twist = {};
      ic.tail.push_back(b);
    }
    ic.tail_rho = cd.on_levi.rho;
  }
  // W_{s^vee}: permutations of equal factors, with sign changes on self-dual cores outside type A.
  std::size_t n = type_a ? k : 2 * k;
  std::vector<Perm> gens;
  for (std::size_t l = 0; l < k;) {
    std::size_t r = l;
    while (r < k && ic.factors[r] == ic.factors[l]) ++r;
    for (std::size_t i = l; i + 1 < r; ++i) {
      Perm p = identity_perm(n);
      std::swap(p[i], p[i + 1]);
      if (!type_a) std::swap(p[k + i], p[k + i + 1]);
      gens.push_back(p);
    }
    if (!type_a && ic.factors[l].duality != Duality::None) {
      Perm p = identity_perm(n);
      std::swap(p[r - 1], p[k + r - 1]);
      gens.push_back(p);
    }
    l = r;
  }
  if (gens.empty()) {
    ic.w = FiniteGroup::trivial();
    ic.w_perms = {identity_perm(n)};
  } else {
    ic.w = FiniteGroup::from_perms(gens);
    ic.w_perms = ic.w->perms();
  }
  return ic;
}

InertialClass bernstein_component(const EnhancedParameter& p, const std::vector<SpringerTable>& tables) {
  return inertial_class(cuspidal_support(p, tables));
}

long symmetric_character(const Partition& lambda, const Partition& cycle_type) {
  if (total(lambda) != total(cycle_type)) throw ValidationError("symmetric_character: sizes differ");
  // Beta-numbers: removing an r-rim hook moves one bead down by r.
  std::vector<int> beta;
  auto len = static_cast<int>(lambda.size());
  for (int i = 0; i < len; ++i) beta.push_back(lambda[static_cast<std::size_t>(i)] + len - 1 - i);
  std::function<long(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& b, std::size_t pos) -> long {
    if (pos == cycle_type.size()) return 1;
    int r = cycle_type[pos];
    long sum = 0;
    for (auto& x : b) {
      int y = x - r;
      if (y < 0 || std::find(b.begin(), b.end(), y) != b.end()) continue;
      int between = static_cast<int>(std::count_if(b.begin(), b.end(), [&](int z) { return z > y && z < x; }));
      int old = x;
      x = y;
      sum += (between % 2 ? -1 : 1) * rec(b, pos + 1);
      x = old;
    }
    return sum;
  };
  return rec(beta, 0);
}

namespace {

Twist negate(const Twist& t) { return {-t.s, t.zeta.inverse()}; }

std::string twist_label(const std::vector<Twist>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + to_string(t[i]);
  return out + ")";
}

Partition cycle_type_on(const Perm& p, const std::vector<int>& positions) {
  std::vector<char> seen(p.size(), 0);
  Partition out;
  for (int s : positions) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    for (int x = s; !seen[static_cast<std::size_t>(x)]; x = p[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return make_partition(out);
}

/// Type A: the enhanced parameter of a point (t, rho), rho read off as a product of characters chi^lambda_i.
EnhancedParameter point_parameter(const InertialClass& s, const ActionDatum& d, const std::vector<Twist>& t,
                                  const QuotientPoint& qp) {
  const auto& stab = d.stabilizers[static_cast<std::size_t>(qp.x)];
  std::map<std::pair<LeviFactor, Twist>, std::vector<int>> groups;
  for (std::size_t i = 0; i < t.size(); ++i) groups[{s.factors[i], t[i]}].push_back(static_cast<int>(i));
  Cyclotomic dim(static_cast<long>(qp.dim));
  LParameter phi{s.group, {}};
  for (const auto& [key, pos] : groups) {
    std::vector<std::pair<std::size_t, Partition>> elems;  // (position in stabilizer, cycle type on pos)
    for (std::size_t i = 0; i < stab.order(); ++i) {
      const auto& p = s.w_perms[static_cast<std::size_t>(stab.elements[i])];
      bool inside = true;
      for (std::size_t q = 0; q < p.size() && inside; ++q)
        if (std::find(pos.begin(), pos.end(), static_cast<int>(q)) == pos.end() && p[q] != static_cast<int>(q)) inside = false;
      if (inside) elems.emplace_back(i, cycle_type_on(p, pos));
    }
    std::optional<Partition> found;
    Partition one(pos.size(), 1);
    for (const auto& lambda : partitions(static_cast<int>(pos.size()))) {
      long deg = symmetric_character(lambda, one);
      bool ok = std::all_of(elems.begin(), elems.end(), [&](const auto& e) {
        return qp.traces[e.first] * Cyclotomic(deg) == dim * Cyclotomic(symmetric_character(lambda, e.second));
      });
      if (ok) {
        if (found) throw Error("isotropy character does not determine a partition");
        found = lambda;
      }
    }
    if (!found) throw Error("isotropy character is not a product of symmetric group characters");
    const auto& [f, tw] = key;
    for (int part : *found) phi.blocks.push_back({{f.core, f.dim, Duality::None, f.core, tw}, f.a * part, 1});
  }
  phi = validate(phi);
  long g = 0;
  for (const auto& b : phi.blocks) g = gcd_long(g, b.a);
  int e = s.factors.empty() ? 1 : s.factors[0].a;
  return {phi, {{}, s.cyclic * g / e}};
}

}  // namespace

ComponentQuotient component_extended_quotient(const InertialClass& s, const std::vector<Twist>& base) {
  std::size_t k = s.factors.size();
  std::vector<Twist> start = base.empty() ? std::vector<Twist>(k) : base;
  if (start.size() != k) throw ValidationError("base point needs one twist per Levi factor");
  bool signed_action = k > 0 && s.w_perms[0].size() == 2 * k;
  auto act = [&](const Perm& p, const std::vector<Twist>& t) {
    std::vector<Twist> out(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto j = static_cast<std::size_t>(p[i]);
      out[i] = j < k ? t[j] : negate(t[j - k]);
    }
    return out;
  };
  std::map<std::vector<Twist>, int> index;
  std::vector<std::vector<Twist>> xs;
  for (const auto& p : s.w_perms) {
    auto y = act(p, start);
    if (index.emplace(y, static_cast<int>(xs.size())).second) xs.push_back(y);
  }
  std::vector<int> action(s.w_perms.size() * xs.size());
  for (std::size_t g = 0; g < s.w_perms.size(); ++g)
    for (std::size_t x = 0; x < xs.size(); ++x) action[g * xs.size() + x] = index.at(act(s.w_perms[g], xs[x]));
  std::vector<std::string> labels;
  for (const auto& x : xs) labels.push_back(twist_label(x));
  ComponentQuotient cq{ActionDatum::make(std::move(labels), s.w, std::move(action)), {}, {}, true};
  cq.quotient = build_extended_quotient(cq.datum, 0);
  for (const auto& qp : cq.quotient.points) {
    ComponentPoint pt{xs[static_cast<std::size_t>(qp.x)], qp, std::nullopt};
    if (s.group.kind == GroupKindL::GLinner && !signed_action) pt.parameter = point_parameter(s, cq.datum, pt.twists, qp);
    cq.points.push_back(std::move(pt));
  }
  return cq;
}

ComponentQuotient component_extended_quotient(const SectionDatum& extension, const std::string& label) {
  auto sc = cocycle_from_section(extension);
  auto w = sc.quotient.group;
  ComponentQuotient cq{ActionDatum::make({label}, w, std::vector<int>(w->order(), 0)), {}, {}, true};
  cq.datum.set_kappa(0, sc.natural);
  cq.cocycle_trivial = cohomologous(sc.natural, TwoCocycle::trivial(w)).has_value();
  cq.quotient = build_extended_quotient(cq.datum);
  for (const auto& qp : cq.quotient.points) cq.points.push_back({{}, qp, std::nullopt});
  return cq;
}

}  // namespace lpcusp
