#include "lpcusp/reps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lpcusp/error.hpp"
#include "lpcusp/modular.hpp"

namespace lpcusp {

namespace md = modular;

namespace {

constexpr std::size_t kCharTableSlot = 0;
constexpr std::size_t kIrrepSlot = 1;

// Powers of the class representative: class index of g^t for t = 0..ord-1.
std::vector<int> power_classes(const FiniteGroup& g, int rep) {
  std::vector<int> out;
  int x = 0;
  int o = g.element_order(rep);
  for (int t = 0; t < o; ++t) {
    out.push_back(g.class_of(x));
    x = g.mul(x, rep);
  }
  return out;
}

bool character_less(const Character& a, const Character& b) {
  if (a.degree() != b.degree()) return a.degree().rational_value() < b.degree().rational_value();
  auto trivial = [](const Character& c) {
    return std::all_of(c.values.begin(), c.values.end(), [](const Cyclotomic& v) { return v.is_one(); });
  };
  bool ta = trivial(a), tb = trivial(b);
  if (ta != tb) return ta;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    auto c = canonical_compare(a.values[i], b.values[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<Character> compute_character_table(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const auto& classes = g.classes();
  std::size_t r = classes.size();
  long order = static_cast<long>(g.order());
  if (r == 1) return {Character{gp, {Cyclotomic(1)}}};

  long e = g.exponent();
  long p = md::prime_congruent_one(e, std::max<long>(100, 2 * order));
  long w_e = md::powmod(md::primitive_root(p), (p - 1) / e, p);

  std::vector<int> reps(r), inv_class(r);
  std::vector<long> sizes(r);
  for (std::size_t l = 0; l < r; ++l) {
    reps[l] = classes[l].front();
    sizes[l] = static_cast<long>(classes[l].size());
    inv_class[l] = g.class_of(g.inv(reps[l]));
  }

  // a_j[l][i] = #{x in C_j : x^-1 g_i in C_l}; the central characters are common eigenvectors.
  std::vector<md::ModMatrix> a(r, md::ModMatrix(r, md::ModVector(r, 0)));
  for (std::size_t j = 1; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i)
      for (int x : classes[j]) {
        auto l = static_cast<std::size_t>(g.class_of(g.mul(g.inv(x), reps[i])));
        a[j][l][i] += 1;
      }

  std::vector<std::vector<md::ModVector>> spaces;
  {
    std::vector<md::ModVector> basis;
    for (std::size_t i = 0; i < r; ++i) {
      md::ModVector v(r, 0);
      v[i] = 1;
      basis.push_back(v);
    }
    spaces.push_back(basis);
  }
  for (std::size_t j = 1; j < r; ++j) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_split) break;
    std::vector<std::vector<md::ModVector>> next;
    for (auto& basis : spaces) {
      std::size_t k = basis.size();
      if (k == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // Solve B C = A_j B for the restricted action C.
      md::ModMatrix aug(r, md::ModVector(2 * k, 0));
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t row = 0; row < r; ++row) {
          aug[row][c] = basis[c][row];
          long acc = 0;
          for (std::size_t i = 0; i < r; ++i)
            if (a[j][row][i] != 0) acc = (acc + md::mulmod(a[j][row][i], basis[c][i], p)) % p;
          aug[row][k + c] = acc;
        }
      auto piv = md::rref(aug, 2 * k, p);
      if (piv.size() < k || piv[k - 1] != k - 1) throw Error("character table: basis degenerated");
      md::ModMatrix cm(k, md::ModVector(k, 0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < k; ++c) cm[i][c] = aug[i][k + c];
      auto lambdas = md::roots(md::charpoly(cm, p), p);
      if (lambdas.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::size_t total = 0;
      for (long lam : lambdas) {
        md::ModMatrix shifted = cm;
        for (std::size_t i = 0; i < k; ++i) shifted[i][i] = mod_floor(shifted[i][i] - lam, p);
        auto ns = md::nullspace(shifted, k, p);
        std::vector<md::ModVector> sub;
        for (const auto& v : ns) {
          md::ModVector big(r, 0);
          for (std::size_t c = 0; c < k; ++c)
            if (v[c] != 0)
              for (std::size_t row = 0; row < r; ++row)
                big[row] = (big[row] + md::mulmod(v[c], basis[c][row], p)) % p;
          sub.push_back(std::move(big));
        }
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != k) throw Error("character table: class-sum action is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error("character table: eigenspaces did not split to lines");

  std::vector<std::vector<int>> powers(r);
  for (std::size_t l = 0; l < r; ++l) powers[l] = power_classes(g, reps[l]);

  std::vector<Character> table;
  for (auto& sp : spaces) {
    md::ModVector w = sp.front();
    if (w[0] == 0) throw Error("character table: eigenvector vanishes at the identity class");
    long s0 = md::invmod(w[0], p);
    for (auto& x : w) x = md::mulmod(x, s0, p);
    long s = 0;
    for (std::size_t l = 0; l < r; ++l)
      s = (s + md::mulmod(md::mulmod(w[l], w[static_cast<std::size_t>(inv_class[l])], p), md::invmod(sizes[l], p), p)) % p;
    long d2 = md::mulmod(order % p, md::invmod(s, p), p);
    long d = 0;
    for (long c = 1; c * c <= order; ++c)
      if ((c * c) % p == d2) d = c;
    if (d == 0) throw Error("character table: degree not recovered");
    md::ModVector chi(r);
    for (std::size_t l = 0; l < r; ++l) chi[l] = md::mulmod(md::mulmod(d, w[l], p), md::invmod(sizes[l], p), p);

    Character c{gp, std::vector<Cyclotomic>(r)};
    for (std::size_t l = 0; l < r; ++l) {
      int o = g.element_order(reps[l]);
      long wo = md::powmod(w_e, e / o, p);
      long inv_o = md::invmod(o, p);
      std::vector<Rational> dense(static_cast<std::size_t>(o));
      for (int k = 0; k < o; ++k) {
        long acc = 0;
        long step = md::powmod(wo, mod_floor(-k, o), p);
        long cur = 1;
        for (int t = 0; t < o; ++t) {
          acc = (acc + md::mulmod(chi[static_cast<std::size_t>(powers[l][static_cast<std::size_t>(t)])], cur, p)) % p;
          cur = md::mulmod(cur, step, p);
        }
        long mk = md::mulmod(acc, inv_o, p);
        if (mk > d) throw Error("character table: eigenvalue multiplicity out of range");
        dense[static_cast<std::size_t>(k)] = mk;
      }
      c.values[l] = Cyclotomic::from_dense(o, std::move(dense));
    }
    table.push_back(std::move(c));
  }

  // Exact verification: orthonormality of all rows and the degree identity.
  Rational sum_sq = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    sum_sq += table[i].degree().rational_value() * table[i].degree().rational_value();
    for (std::size_t j = i; j < table.size(); ++j) {
      Cyclotomic ip = inner_product(table[i], table[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0))) throw Error("character table failed exact orthogonality check");
    }
  }
  if (sum_sq != order) throw Error("character table degrees do not square-sum to the group order");
  std::sort(table.begin(), table.end(), character_less);
  return table;
}

}  // namespace

Character Character::conj() const {
  Character c{group, values};
  for (auto& v : c.values) v = v.conj();
  return c;
}

Cyclotomic inner_product(const Character& a, const Character& b) {
  if (a.group.get() != b.group.get() && a.values.size() != b.values.size())
    throw ValidationError("inner product of characters of different groups");
  Cyclotomic s;
  const auto& classes = a.group->classes();
  for (std::size_t l = 0; l < classes.size(); ++l) {
    if (a.values[l].is_zero() || b.values[l].is_zero()) continue;
    s += Cyclotomic(static_cast<long>(classes[l].size())) * a.values[l] * b.values[l].conj();
  }
  return s * Cyclotomic(frac(1, static_cast<long>(a.group->order())));
}

const std::vector<Character>& character_table(const GroupPtr& g) {
  return g->cached<std::vector<Character>>(kCharTableSlot, [&] { return compute_character_table(g); });
}

MatrixRep::MatrixRep(GroupPtr group, std::vector<CycloMatrix> mats) : group_(std::move(group)), mats_(std::move(mats)) {
  if (mats_.size() != group_->order()) throw ValidationError("representation needs one matrix per element");
  dim_ = mats_.empty() ? 0 : mats_.front().rows();
}

MatrixRep MatrixRep::from_generators(GroupPtr group, const std::vector<CycloMatrix>& gen_images) {
  const auto& gens = group->generators();
  if (gen_images.size() != gens.size()) throw ValidationError("need one image per generator");
  std::size_t dim = gen_images.empty() ? 1 : gen_images.front().rows();
  for (const auto& m : gen_images)
    if (m.rows() != dim || m.cols() != dim) throw ValidationError("generator images must be square of equal size");
  std::vector<CycloMatrix> mats(group->order());
  std::vector<char> done(group->order(), 0);
  mats[0] = CycloMatrix::identity(dim);
  done[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = group->mul(queue[i], gens[s]);
      if (done[static_cast<std::size_t>(y)]) continue;
      done[static_cast<std::size_t>(y)] = 1;
      mats[static_cast<std::size_t>(y)] = mats[static_cast<std::size_t>(queue[i])] * gen_images[s];
      queue.push_back(y);
    }
  return MatrixRep(std::move(group), std::move(mats));
}

MatrixRep MatrixRep::from_linear(const Character& chi) {
  if (!(chi.degree() == Cyclotomic(1))) throw ValidationError("character is not linear");
  std::vector<CycloMatrix> mats;
  for (std::size_t g = 0; g < chi.group->order(); ++g) mats.push_back(CycloMatrix::scalar(1, chi.at(static_cast<int>(g))));
  return MatrixRep(chi.group, std::move(mats));
}

MatrixRep MatrixRep::trivial(GroupPtr group, std::size_t dim) {
  std::vector<CycloMatrix> mats(group->order(), CycloMatrix::identity(dim));
  return MatrixRep(std::move(group), std::move(mats));
}

Character MatrixRep::character() const {
  Character c{group_, {}};
  for (const auto& cls : group_->classes()) c.values.push_back(mats_[static_cast<std::size_t>(cls.front())].trace());
  return c;
}

bool MatrixRep::is_homomorphism() const {
  if (!(mats_[0] == CycloMatrix::identity(dim_))) return false;
  for (std::size_t x = 0; x < group_->order(); ++x)
    for (int s : group_->generators())
      if (!(mats_[x] * mats_[static_cast<std::size_t>(s)] == mats_[static_cast<std::size_t>(group_->mul(static_cast<int>(x), s))]))
        return false;
  return true;
}

namespace {

// Cyclic subgroup generated by g, as elements g^0..g^(o-1).
std::vector<int> cyclic_elements(const FiniteGroup& g, int x) {
  std::vector<int> e;
  int y = 0;
  do {
    e.push_back(y);
    y = g.mul(y, x);
  } while (y != 0);
  return e;
}

// Realizes chi inside the left ideal K[G] e_chi f, where f is a primitive idempotent of K[H]
// affording psi and <Res chi, psi> = 1. `coeff[h]` holds f's coefficient at element h of G.
MatrixRep realize_from_idempotent(const GroupPtr& gp, const Character& chi, const std::vector<std::pair<int, Cyclotomic>>& f) {
  const FiniteGroup& g = *gp;
  std::size_t n = g.order();
  auto d = static_cast<std::size_t>(chi.degree().rational_value().get_num().get_si());
  Cyclotomic scale = chi.degree() * Cyclotomic(frac(1, static_cast<long>(n)));
  std::vector<Cyclotomic> chi_elem(n);
  for (std::size_t x = 0; x < n; ++x) chi_elem[x] = chi.at(static_cast<int>(x));

  // w = e_chi f, w[x] = sum_h f_h (chi(1)/|G|) chi(h x^-1)
  std::vector<Cyclotomic> w(n);
  for (std::size_t x = 0; x < n; ++x) {
    Cyclotomic acc;
    int xinv = g.inv(static_cast<int>(x));
    for (const auto& [h, c] : f) {
      const Cyclotomic& v = chi_elem[static_cast<std::size_t>(g.mul(h, xinv))];
      if (!v.is_zero()) acc += c * v;
    }
    w[x] = acc * scale;
  }

  auto translate = [&](int t) {
    std::vector<Cyclotomic> v(n);
    int tinv = g.inv(t);
    for (std::size_t x = 0; x < n; ++x) v[x] = w[static_cast<std::size_t>(g.mul(tinv, static_cast<int>(x)))];
    return v;
  };

  std::vector<int> basis_elems;
  std::vector<std::vector<Cyclotomic>> reduced;
  std::vector<std::size_t> pivots;
  for (std::size_t t = 0; t < n && basis_elems.size() < d; ++t) {
    auto v = translate(static_cast<int>(t));
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Cyclotomic c = v[pivots[k]];
      if (c.is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (!reduced[k][x].is_zero()) v[x] -= c * reduced[k][x];
    }
    std::size_t piv = n;
    for (std::size_t x = 0; x < n; ++x)
      if (!v[x].is_zero()) {
        piv = x;
        break;
      }
    if (piv == n) continue;
    Cyclotomic inv = v[piv].inverse();
    for (auto& c : v)
      if (!c.is_zero()) c *= inv;
    reduced.push_back(std::move(v));
    pivots.push_back(piv);
    basis_elems.push_back(static_cast<int>(t));
  }
  if (basis_elems.size() != d) throw Error("irrep construction: left ideal has unexpected dimension");

  CycloMatrix bp(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    int tinv = g.inv(basis_elems[j]);
    for (std::size_t i = 0; i < d; ++i)
      bp(i, j) = w[static_cast<std::size_t>(g.mul(tinv, static_cast<int>(pivots[i])))];
  }
  auto bp_inv = bp.inverse();
  if (!bp_inv) throw Error("irrep construction: pivot block is singular");

  std::vector<CycloMatrix> gen_images;
  for (int s : g.generators()) {
    CycloMatrix rhs(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      int tinv = g.inv(g.mul(s, basis_elems[j]));
      for (std::size_t i = 0; i < d; ++i)
        rhs(i, j) = w[static_cast<std::size_t>(g.mul(tinv, static_cast<int>(pivots[i])))];
    }
    gen_images.push_back(*bp_inv * rhs);
  }
  auto rep = MatrixRep::from_generators(gp, gen_images);
  if (!(rep.character() == chi) || !rep.is_homomorphism())
    throw Error("irrep construction: realized matrices do not afford the character");
  return rep;
}

MatrixRep build_irrep(const GroupPtr& gp, const Character& chi) {
  const FiniteGroup& g = *gp;
  if (chi.degree() == Cyclotomic(1)) return MatrixRep::from_linear(chi);

  // Cyclic subgroups: linear psi with multiplicity one in Res chi.
  for (const auto& cls : g.classes()) {
    int x = cls.front();
    auto elems = cyclic_elements(g, x);
    auto o = static_cast<long>(elems.size());
    if (o == 1) continue;
    for (long k = 0; k < o; ++k) {
      Cyclotomic mult;
      for (long t = 0; t < o; ++t)
        mult += chi.at(elems[static_cast<std::size_t>(t)]) * Cyclotomic::zeta(static_cast<int>(o), -k * t);
      mult = mult * Cyclotomic(frac(1, static_cast<long>(o)));
      if (!mult.is_one()) continue;
      std::vector<std::pair<int, Cyclotomic>> f;
      for (long t = 0; t < o; ++t)
        f.emplace_back(elems[static_cast<std::size_t>(t)],
                       Cyclotomic::zeta(static_cast<int>(o), -k * t) * Cyclotomic(frac(1, static_cast<long>(o))));
      return realize_from_idempotent(gp, chi, f);
    }
  }

  // Two-generated proper subgroups, with psi realized recursively.
  std::set<std::vector<int>> tried;
  for (const auto& cls : g.classes()) {
    for (std::size_t y = 1; y < g.order(); ++y) {
      auto h = generated_subgroup(gp, {cls.front(), static_cast<int>(y)});
      if (h.order() == g.order() || h.order() == 1 || !tried.insert(h.elements).second) continue;
      auto sub = as_group(h);
      const auto& sub_table = character_table(sub.group);
      auto res = restrict(chi, sub.embedding);
      for (std::size_t i = 0; i < sub_table.size(); ++i) {
        if (!inner_product(res, sub_table[i]).is_one()) continue;
        const auto& psi = irreps_matrices(sub.group, sub.group->order())[i];
        Cyclotomic scale = Cyclotomic(static_cast<long>(psi.dim())) * Cyclotomic(frac(1, static_cast<long>(h.order())));
        std::vector<std::pair<int, Cyclotomic>> f;
        for (std::size_t e = 0; e < h.order(); ++e) {
          const Cyclotomic& c = psi(sub.group->inv(static_cast<int>(e)))(0, 0);
          if (!c.is_zero()) f.emplace_back(h.elements[e], c * scale);
        }
        return realize_from_idempotent(gp, chi, f);
      }
    }
  }
  throw NotSupported("no multiplicity-one restriction found for an irreducible character of degree " +
                     chi.degree().to_string());
}

}  // namespace

const std::vector<MatrixRep>& irreps_matrices(const GroupPtr& g, std::size_t bound) {
  if (g->order() > bound)
    throw BoundExceeded("group of order " + std::to_string(g->order()) + " exceeds the matrix bound " +
                        std::to_string(bound) + "; use character-only mode");
  return g->cached<std::vector<MatrixRep>>(kIrrepSlot, [&] {
    std::vector<MatrixRep> out;
    for (const auto& chi : character_table(g)) out.push_back(build_irrep(g, chi));
    return out;
  });
}

MatrixRep restrict(const MatrixRep& rho, const GroupHom& emb) {
  std::vector<CycloMatrix> mats;
  for (std::size_t h = 0; h < emb.source->order(); ++h) mats.push_back(rho(emb(static_cast<int>(h))));
  return MatrixRep(emb.source, std::move(mats));
}

Character restrict(const Character& chi, const GroupHom& emb) {
  Character c{emb.source, {}};
  for (const auto& cls : emb.source->classes()) c.values.push_back(chi.at(emb(cls.front())));
  return c;
}

namespace {

struct Transversal {
  std::vector<int> reps;
  std::vector<int> pos;  // pos[g] = index in H of g, or -1
};

Transversal left_transversal(const GroupHom& emb) {
  const FiniteGroup& g = *emb.target;
  Transversal t;
  t.pos.assign(g.order(), -1);
  for (std::size_t h = 0; h < emb.source->order(); ++h) t.pos[static_cast<std::size_t>(emb(static_cast<int>(h)))] = static_cast<int>(h);
  std::vector<char> covered(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    t.reps.push_back(static_cast<int>(x));
    for (std::size_t h = 0; h < emb.source->order(); ++h)
      covered[static_cast<std::size_t>(g.mul(static_cast<int>(x), emb(static_cast<int>(h))))] = 1;
  }
  return t;
}

}  // namespace

MatrixRep induce(const MatrixRep& pi, const GroupHom& emb) {
  if (!emb.injective()) throw ValidationError("induction along a non-injective map");
  const FiniteGroup& g = *emb.target;
  auto tr = left_transversal(emb);
  std::size_t n = tr.reps.size(), d = pi.dim();
  std::vector<CycloMatrix> gen_images;
  for (int s : g.generators()) {
    CycloMatrix m(n * d, n * d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        int x = g.mul(g.mul(g.inv(tr.reps[i]), s), tr.reps[j]);
        int h = tr.pos[static_cast<std::size_t>(x)];
        if (h < 0) continue;
        const auto& b = pi(h);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t c = 0; c < d; ++c) m(i * d + a, j * d + c) = b(a, c);
      }
    gen_images.push_back(std::move(m));
  }
  if (g.generators().empty()) return MatrixRep::trivial(emb.target, n * d);
  return MatrixRep::from_generators(emb.target, gen_images);
}

Character induce(const Character& psi, const GroupHom& emb) {
  const FiniteGroup& g = *emb.target;
  std::vector<int> pos(g.order(), -1);
  for (std::size_t h = 0; h < emb.source->order(); ++h) pos[static_cast<std::size_t>(emb(static_cast<int>(h)))] = static_cast<int>(h);
  Character c{emb.target, {}};
  Cyclotomic scale(frac(1, static_cast<long>(emb.source->order())));
  for (const auto& cls : g.classes()) {
    Cyclotomic acc;
    for (std::size_t x = 0; x < g.order(); ++x) {
      int y = g.conj(cls.front(), g.inv(static_cast<int>(x)));
      int h = pos[static_cast<std::size_t>(y)];
      if (h >= 0) acc += psi.at(h);
    }
    c.values.push_back(acc * scale);
  }
  return c;
}

std::vector<CycloMatrix> hom_space(const MatrixRep& r1, const MatrixRep& r2) {
  if (r1.group().get() != r2.group().get() && r1.group()->order() != r2.group()->order())
    throw ValidationError("hom_space needs representations of the same group");
  std::size_t d1 = r1.dim(), d2 = r2.dim(), unknowns = d1 * d2;
  const auto& gens = r1.group()->generators();
  CycloMatrix sys(std::max<std::size_t>(gens.size() * unknowns, 1), unknowns);
  std::size_t row = 0;
  for (int s : gens) {
    const auto& a = r1(s);
    const auto& b = r2(s);
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t c = 0; c < d1; ++c, ++row) {
        // (T a)_{ic} - (b T)_{ic}
        for (std::size_t k = 0; k < d1; ++k)
          if (!a(k, c).is_zero()) sys(row, i * d1 + k) += a(k, c);
        for (std::size_t k = 0; k < d2; ++k)
          if (!b(i, k).is_zero()) sys(row, k * d1 + c) -= b(i, k);
      }
  }
  std::vector<CycloMatrix> out;
  for (const auto& v : sys.nullspace()) {
    CycloMatrix t(d2, d1);
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t c = 0; c < d1; ++c) t(i, c) = v[i * d1 + c];
    out.push_back(std::move(t));
  }
  return out;
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  std::vector<CycloMatrix> mats;
  for (std::size_t g = 0; g < a.group()->order(); ++g) mats.push_back(direct_sum(a(static_cast<int>(g)), b(static_cast<int>(g))));
  return MatrixRep(a.group(), std::move(mats));
}

MatrixRep tensor(const MatrixRep& a, const MatrixRep& b) {
  std::vector<CycloMatrix> mats;
  for (std::size_t g = 0; g < a.group()->order(); ++g) mats.push_back(kronecker(a(static_cast<int>(g)), b(static_cast<int>(g))));
  return MatrixRep(a.group(), std::move(mats));
}

MatrixRep dual(const MatrixRep& rho) {
  std::vector<CycloMatrix> mats;
  for (std::size_t g = 0; g < rho.group()->order(); ++g)
    mats.push_back(rho(rho.group()->inv(static_cast<int>(g))).transpose());
  return MatrixRep(rho.group(), std::move(mats));
}

}  // namespace lpcusp
