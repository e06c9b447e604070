#include "lpcusp/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "lpcusp/error.hpp"

namespace lpcusp {

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  MonomialMatrix m;
  m.col.resize(n);
  std::iota(m.col.begin(), m.col.end(), 0);
  m.val.assign(n, RootOfUnity());
  return m;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("monomial matrix dimension mismatch");
  MonomialMatrix p;
  p.col.resize(a.dim());
  p.val.resize(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto j = static_cast<std::size_t>(a.col[i]);
    p.col[i] = b.col[j];
    p.val[i] = a.val[i] * b.val[j];
  }
  return p;
}

MonomialMatrix monomial_from_entries(std::size_t dim, const std::vector<std::tuple<int, int, Cyclotomic>>& entries) {
  MonomialMatrix m;
  m.col.assign(dim, -1);
  m.val.assign(dim, RootOfUnity());
  std::vector<bool> used(dim, false);
  for (const auto& [r, c, v] : entries) {
    if (v.is_zero()) continue;
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= dim || static_cast<std::size_t>(c) >= dim)
      throw ValidationError("matrix entry index out of range");
    if (m.col[static_cast<std::size_t>(r)] != -1) throw ValidationError("matrix is not monomial: row " + std::to_string(r));
    if (used[static_cast<std::size_t>(c)]) throw ValidationError("matrix is not monomial: column " + std::to_string(c));
    auto root = as_root_of_unity(v);
    if (!root) throw ValidationError("monomial entry " + v.to_string() + " is not a root of unity; the generated group is infinite");
    m.col[static_cast<std::size_t>(r)] = c;
    m.val[static_cast<std::size_t>(r)] = *root;
    used[static_cast<std::size_t>(c)] = true;
  }
  for (std::size_t r = 0; r < dim; ++r)
    if (m.col[r] == -1) throw ValidationError("matrix generator is not invertible (zero row " + std::to_string(r) + ")");
  return m;
}

namespace {

struct MonomialLess {
  bool operator()(const MonomialMatrix& a, const MonomialMatrix& b) const {
    if (a.col != b.col) return a.col < b.col;
    for (std::size_t i = 0; i < a.val.size(); ++i) {
      auto x = std::make_pair(a.val[i].order, a.val[i].exponent);
      auto y = std::make_pair(b.val[i].order, b.val[i].exponent);
      if (x != y) return x < y;
    }
    return false;
  }
};

template <class T>
struct Closure {
  std::vector<T> elems;
  std::vector<int> parent, lastgen;
  std::vector<std::vector<int>> right;  // right[i][s] = index of elems[i] * gens[s]
};

template <class T, class Less, class Mul>
Closure<T> close_under(const std::vector<T>& gens, T id, Mul mul, std::size_t bound) {
  Closure<T> c;
  std::map<T, int, Less> index;
  c.elems.push_back(id);
  c.parent.push_back(-1);
  c.lastgen.push_back(-1);
  index.emplace(id, 0);
  std::size_t limit = std::min(bound, kMaxTableOrder);
  for (std::size_t i = 0; i < c.elems.size(); ++i) {
    std::vector<int> row(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      T y = mul(c.elems[i], gens[s]);
      auto it = index.find(y);
      if (it == index.end()) {
        if (c.elems.size() >= limit) {
          throw BoundExceeded("group closure exceeded " + std::to_string(limit) +
                              " elements (order bound " + std::to_string(bound) + ", table limit " +
                              std::to_string(kMaxTableOrder) + ")");
        }
        int idx = static_cast<int>(c.elems.size());
        index.emplace(y, idx);
        c.elems.push_back(std::move(y));
        c.parent.push_back(static_cast<int>(i));
        c.lastgen.push_back(static_cast<int>(s));
        row[s] = idx;
      } else {
        row[s] = it->second;
      }
    }
    c.right.push_back(std::move(row));
  }
  return c;
}

template <class T>
std::vector<int> table_from_closure(const Closure<T>& c) {
  std::size_t n = c.elems.size();
  std::vector<int> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    t[a * n] = static_cast<int>(a);
    for (std::size_t b = 1; b < n; ++b) {
      int ap = t[a * n + static_cast<std::size_t>(c.parent[b])];
      t[a * n + b] = c.right[static_cast<std::size_t>(ap)][static_cast<std::size_t>(c.lastgen[b])];
    }
  }
  return t;
}

// Elements of the subgroup generated by `gens` inside a table group, as a membership mask.
std::vector<char> generated_mask(const std::vector<int>& table, std::size_t n, const std::vector<int>& gens) {
  std::vector<char> in(n, 0);
  std::vector<int> queue{0};
  in[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int s : gens) {
      int y = table[static_cast<std::size_t>(queue[i]) * n + static_cast<std::size_t>(s)];
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace

int FiniteGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= elt_order_.empty() ? 1 : element_order(a);
  int r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::find_perm(const Perm& p) const {
  for (std::size_t i = 0; i < perms_.size(); ++i)
    if (perms_[i] == p) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> FiniteGroup::find_matrix(const MonomialMatrix& m) const {
  for (std::size_t i = 0; i < mats_.size(); ++i)
    if (mats_[i] == m) return static_cast<int>(i);
  return std::nullopt;
}

void FiniteGroup::finish() {
  std::size_t n = n_;
  inv_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inv_[a] = static_cast<int>(b);
        break;
      }
  if (gens_.empty() && n > 1) {
    std::vector<char> in(n, 0);
    in[0] = 1;
    for (std::size_t g = 1; g < n; ++g) {
      if (in[g]) continue;
      gens_.push_back(static_cast<int>(g));
      in = generated_mask(table_, n, gens_);
    }
  }
  if (words_.size() != n) {
    words_.assign(n, {});
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        int y = mul(queue[i], gens_[s]);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        words_[static_cast<std::size_t>(y)] = words_[static_cast<std::size_t>(queue[i])];
        words_[static_cast<std::size_t>(y)].push_back(static_cast<int>(s));
        queue.push_back(y);
      }
    }
  }
  elt_order_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t g = 0; g < n; ++g) {
    int x = static_cast<int>(g), k = 1;
    while (x != 0) {
      x = mul(x, static_cast<int>(g));
      ++k;
    }
    elt_order_[g] = g == 0 ? 1 : k;
    exponent_ = lcm_long(exponent_, elt_order_[g]);
  }
  class_of_.assign(n, -1);
  classes_.clear();
  for (std::size_t g = 0; g < n; ++g) {
    if (class_of_[g] != -1) continue;
    std::vector<int> cls{static_cast<int>(g)};
    class_of_[g] = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (int s : gens_) {
        int y = conj(cls[i], s);
        if (class_of_[static_cast<std::size_t>(y)] == -1) {
          class_of_[static_cast<std::size_t>(y)] = 0;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  std::stable_sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (int g : classes_[c]) class_of_[static_cast<std::size_t>(g)] = static_cast<int>(c);
}

GroupPtr make_group_from_table(std::vector<int> table, std::size_t n, GroupKind kind, std::string name,
                               std::vector<GroupPtr> related) {
  if (n > kMaxTableOrder) throw BoundExceeded("group order " + std::to_string(n) + " exceeds table limit");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_ = std::move(table);
  g->kind_ = kind;
  g->name_ = std::move(name);
  g->related_ = std::move(related);
  g->words_.clear();
  g->finish();
  return g;
}

GroupPtr FiniteGroup::trivial() { return make_group_from_table({0}, 1, GroupKind::trivial, "trivial"); }

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& rows, std::string name) {
  std::size_t n = rows.size();
  if (n == 0) throw ValidationError("empty multiplication table");
  if (n > kMaxTableOrder) throw BoundExceeded("group order " + std::to_string(n) + " exceeds table limit");
  std::vector<int> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw ValidationError("multiplication table is not square");
    std::vector<char> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw ValidationError("table entry out of range");
      if (seen[static_cast<std::size_t>(v)]) throw ValidationError("table row " + std::to_string(a) + " repeats an element");
      seen[static_cast<std::size_t>(v)] = 1;
      t[a * n + b] = v;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != static_cast<int>(a) || t[a * n] != static_cast<int>(a))
      throw ValidationError("element 0 is not the identity of the table");
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      auto v = static_cast<std::size_t>(t[a * n + b]);
      if (seen[v]) throw ValidationError("table column " + std::to_string(b) + " repeats an element");
      seen[v] = 1;
    }
  }
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    auto ab = static_cast<std::size_t>(t[a * n + b]), bc = static_cast<std::size_t>(t[b * n + c]);
    if (t[ab * n + c] != t[a * n + bc])
      throw ValidationError("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  return make_group_from_table(std::move(t), n, GroupKind::table, std::move(name));
}

GroupPtr FiniteGroup::from_perms(const std::vector<Perm>& gens, std::size_t bound) {
  std::size_t deg = 0;
  for (const auto& p : gens) deg = std::max(deg, p.size());
  std::vector<Perm> g2;
  for (const auto& p : gens) {
    Perm q(deg);
    std::iota(q.begin(), q.end(), 0);
    std::vector<char> seen(deg, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || static_cast<std::size_t>(p[i]) >= p.size() || seen[static_cast<std::size_t>(p[i])])
        throw ValidationError("generator is not a permutation");
      seen[static_cast<std::size_t>(p[i])] = 1;
      q[i] = p[i];
    }
    g2.push_back(std::move(q));
  }
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  // Convention: (p*q)(i) = q(p(i)), i.e. apply p first, matching right multiplication in the closure.
  auto mul = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
    return r;
  };
  auto c = close_under<Perm, std::less<Perm>>(g2, id, mul, bound);
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = c.elems.size();
  g->table_ = table_from_closure(c);
  g->kind_ = g->n_ == 1 ? GroupKind::trivial : GroupKind::perm;
  g->name_ = "perm";
  g->words_.assign(g->n_, {});
  for (std::size_t i = 1; i < g->n_; ++i) {
    g->words_[i] = g->words_[static_cast<std::size_t>(c.parent[i])];
    g->words_[i].push_back(c.lastgen[i]);
  }
  for (std::size_t s = 0; s < g2.size(); ++s) g->gens_.push_back(c.right[0][s]);
  g->perms_ = std::move(c.elems);
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_monomials(const std::vector<MonomialMatrix>& gens, std::size_t bound) {
  std::size_t dim = gens.empty() ? 0 : gens[0].dim();
  for (const auto& m : gens)
    if (m.dim() != dim) throw ValidationError("matrix generators have different sizes");
  auto mul = [](const MonomialMatrix& a, const MonomialMatrix& b) { return a * b; };
  auto c = close_under<MonomialMatrix, MonomialLess>(gens, MonomialMatrix::identity(dim), mul, bound);
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = c.elems.size();
  g->table_ = table_from_closure(c);
  g->kind_ = g->n_ == 1 ? GroupKind::trivial : GroupKind::monomial;
  g->name_ = "monomial";
  g->words_.assign(g->n_, {});
  for (std::size_t i = 1; i < g->n_; ++i) {
    g->words_[i] = g->words_[static_cast<std::size_t>(c.parent[i])];
    g->words_[i].push_back(c.lastgen[i]);
  }
  for (std::size_t s = 0; s < gens.size(); ++s) g->gens_.push_back(c.right[0][s]);
  g->mats_ = std::move(c.elems);
  g->finish();
  return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  auto un = static_cast<std::size_t>(n);
  std::vector<int> t(un * un);
  for (std::size_t a = 0; a < un; ++a)
    for (std::size_t b = 0; b < un; ++b) t[a * un + b] = static_cast<int>((a + b) % un);
  return make_group_from_table(std::move(t), un, n == 1 ? GroupKind::trivial : GroupKind::table,
                               "C" + std::to_string(n));
}

GroupPtr FiniteGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral parameter must be positive");
  if (n == 1) return cyclic(2);
  if (n == 2) return elementary_abelian2(2);
  Perm r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)] = (i + 1) % n;
    s[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return from_perms({r, s});
}

GroupPtr FiniteGroup::symmetric(int n) {
  if (n <= 1) return trivial();
  if (n == 2) return from_perms({{1, 0}});
  Perm t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
  return from_perms({t, c});
}

GroupPtr FiniteGroup::alternating(int n) {
  if (n <= 2) return trivial();
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[static_cast<std::size_t>(k)] = 0;
    gens.push_back(p);
  }
  return from_perms(gens);
}

GroupPtr FiniteGroup::elementary_abelian2(int r) {
  if (r < 0 || r > 12) throw ValidationError("rank of (Z/2)^r out of range");
  std::size_t n = std::size_t{1} << r;
  std::vector<int> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<int>(a ^ b);
  return make_group_from_table(std::move(t), n, r == 0 ? GroupKind::trivial : GroupKind::table,
                               "(Z/2)^" + std::to_string(r));
}

GroupPtr FiniteGroup::quaternion() {
  MonomialMatrix i_mat{{0, 1}, {RootOfUnity(4, 1), RootOfUnity(4, 3)}};
  MonomialMatrix j_mat{{1, 0}, {RootOfUnity(4, 1), RootOfUnity(4, 1)}};
  return from_monomials({i_mat, j_mat});
}

std::vector<int> GroupHom::kernel() const {
  std::vector<int> k;
  for (std::size_t g = 0; g < image.size(); ++g)
    if (image[g] == 0) k.push_back(static_cast<int>(g));
  return k;
}

bool GroupHom::injective() const { return kernel().size() == 1; }

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> image) {
  if (image.size() != source->order()) throw ValidationError("homomorphism image table has wrong length");
  for (int v : image)
    if (v < 0 || static_cast<std::size_t>(v) >= target->order()) throw ValidationError("homomorphism image out of range");
  for (std::size_t x = 0; x < source->order(); ++x)
    for (int s : source->generators()) {
      int xs = source->mul(static_cast<int>(x), s);
      if (image[static_cast<std::size_t>(xs)] != target->mul(image[x], image[static_cast<std::size_t>(s)]))
        throw ValidationError("map is not a homomorphism at (" + std::to_string(x) + "," + std::to_string(s) + ")");
    }
  if (source->order() > 0 && image[0] != 0) throw ValidationError("homomorphism does not fix the identity");
  return {std::move(source), std::move(target), std::move(image)};
}

bool SubgroupHandle::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

int SubgroupHandle::position(int g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) return -1;
  return static_cast<int>(it - elements.begin());
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<char> in(g.order(), 0);
  for (int h : elements) in[static_cast<std::size_t>(h)] = 1;
  for (int s : g.generators())
    for (int h : elements)
      if (!in[static_cast<std::size_t>(g.conj(h, s))]) return false;
  return true;
}

SubgroupHandle make_subgroup(GroupPtr g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw ValidationError("subgroup must contain the identity");
  std::vector<char> in(g->order(), 0);
  for (int h : elements) {
    if (h < 0 || static_cast<std::size_t>(h) >= g->order()) throw ValidationError("subgroup element out of range");
    in[static_cast<std::size_t>(h)] = 1;
  }
  for (int a : elements) {
    if (!in[static_cast<std::size_t>(g->inv(a))]) throw ValidationError("subset is not closed under inverses");
    for (int b : elements)
      if (!in[static_cast<std::size_t>(g->mul(a, b))])
        throw ValidationError("subset is not closed under multiplication at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
  }
  bool normal = is_normal(*g, elements);
  return {std::move(g), std::move(elements), normal};
}

SubgroupHandle generated_subgroup(GroupPtr g, const std::vector<int>& gens) {
  std::vector<int> elems{0};
  std::vector<char> in(g->order(), 0);
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int y = g->mul(elems[i], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  bool normal = is_normal(*g, elems);
  return {std::move(g), std::move(elems), normal};
}

SubgroupHandle whole_group(GroupPtr g) {
  std::vector<int> e(g->order());
  std::iota(e.begin(), e.end(), 0);
  return {std::move(g), std::move(e), true};
}

SubgroupHandle trivial_subgroup(GroupPtr g) { return {std::move(g), {0}, true}; }

SubgroupGroup as_group(const SubgroupHandle& h) {
  std::size_t n = h.order();
  std::vector<int> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = h.position(h.parent->mul(h.elements[a], h.elements[b]));
  auto sub = make_group_from_table(std::move(t), n, n == 1 ? GroupKind::trivial : GroupKind::table, "subgroup");
  return {sub, GroupHom{sub, h.parent, h.elements}};
}

QuotientResult quotient(GroupPtr g, const SubgroupHandle& n) {
  if (!is_normal(*g, n.elements)) throw ValidationError("quotient by a subgroup that is not normal");
  std::vector<int> label(g->order(), -1), reps;
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (label[x] != -1) continue;
    int l = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int h : n.elements) label[static_cast<std::size_t>(g->mul(static_cast<int>(x), h))] = l;
  }
  std::size_t q = reps.size();
  std::vector<int> t(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) t[a * q + b] = label[static_cast<std::size_t>(g->mul(reps[a], reps[b]))];
  auto qg = make_group_from_table(std::move(t), q, q == 1 ? GroupKind::trivial : GroupKind::quotient,
                                  g->name() + "/N", {g});
  return {qg, GroupHom{g, qg, label}, reps};
}

ExtensionResult central_extension(GroupPtr base, const std::vector<int>& c, int m) {
  if (m < 1) throw ValidationError("extension order must be positive");
  std::size_t n = base->order(), um = static_cast<std::size_t>(m);
  if (c.size() != n * n) throw ValidationError("cocycle table has wrong size");
  std::size_t total = n * um;
  if (total > kMaxTableOrder) throw BoundExceeded("central extension of order " + std::to_string(total) + " exceeds table limit");
  std::vector<int> t(total * total);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t za = 0; za < um; ++za)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t zb = 0; zb < um; ++zb) {
          auto ab = static_cast<std::size_t>(base->mul(static_cast<int>(a), static_cast<int>(b)));
          auto z = static_cast<std::size_t>(mod_floor(static_cast<long>(za + zb) + c[a * n + b], m));
          t[(a * um + za) * total + b * um + zb] = static_cast<int>(ab * um + z);
        }
  auto ext = make_group_from_table(std::move(t), total, total == 1 ? GroupKind::trivial : GroupKind::extension,
                                   base->name() + "~", {base});
  std::vector<int> proj(total);
  for (std::size_t i = 0; i < total; ++i) proj[i] = static_cast<int>(i / um);
  std::vector<int> mu(um);
  std::iota(mu.begin(), mu.end(), 0);
  return {ext, GroupHom{ext, base, proj}, SubgroupHandle{ext, mu, true}, m};
}

GroupPtr direct_product(GroupPtr g, GroupPtr h) {
  std::size_t a = g->order(), b = h->order(), n = a * b;
  if (n > kMaxTableOrder) throw BoundExceeded("direct product of order " + std::to_string(n) + " exceeds table limit");
  std::vector<int> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      int gx = static_cast<int>(x / b), hx = static_cast<int>(x % b);
      int gy = static_cast<int>(y / b), hy = static_cast<int>(y % b);
      t[x * n + y] = g->mul(gx, gy) * static_cast<int>(b) + h->mul(hx, hy);
    }
  return make_group_from_table(std::move(t), n, n == 1 ? GroupKind::trivial : GroupKind::product,
                               g->name() + "x" + h->name(), {g, h});
}

SubgroupHandle centralizer(GroupPtr g, int x) {
  std::vector<int> e;
  for (std::size_t y = 0; y < g->order(); ++y)
    if (g->mul(x, static_cast<int>(y)) == g->mul(static_cast<int>(y), x)) e.push_back(static_cast<int>(y));
  bool normal = is_normal(*g, e);
  return {std::move(g), std::move(e), normal};
}

SubgroupHandle center(GroupPtr g) {
  std::vector<int> e;
  for (std::size_t y = 0; y < g->order(); ++y) {
    bool central = true;
    for (int s : g->generators())
      if (g->mul(s, static_cast<int>(y)) != g->mul(static_cast<int>(y), s)) {
        central = false;
        break;
      }
    if (central) e.push_back(static_cast<int>(y));
  }
  return {std::move(g), std::move(e), true};
}

SubgroupHandle normalizer(GroupPtr g, const std::vector<int>& elements) {
  std::vector<char> in(g->order(), 0);
  for (int h : elements) in[static_cast<std::size_t>(h)] = 1;
  std::vector<int> e;
  for (std::size_t y = 0; y < g->order(); ++y) {
    bool ok = true;
    for (int h : elements)
      if (!in[static_cast<std::size_t>(g->conj(h, static_cast<int>(y)))]) {
        ok = false;
        break;
      }
    if (ok) e.push_back(static_cast<int>(y));
  }
  bool normal = is_normal(*g, e);
  return {std::move(g), std::move(e), normal};
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<int> og, oh;
  for (std::size_t i = 0; i < g.order(); ++i) {
    og.push_back(g.element_order(static_cast<int>(i)));
    oh.push_back(h.element_order(static_cast<int>(i)));
  }
  std::sort(og.begin(), og.end());
  std::sort(oh.begin(), oh.end());
  if (og != oh) return std::nullopt;
  std::vector<int> class_sizes_g, class_sizes_h;
  for (const auto& c : g.classes()) class_sizes_g.push_back(static_cast<int>(c.size()));
  for (const auto& c : h.classes()) class_sizes_h.push_back(static_cast<int>(c.size()));
  if (class_sizes_g != class_sizes_h) return std::nullopt;

  const auto& gens = g.generators();
  std::vector<int> img(gens.size(), -1);
  std::function<std::optional<std::vector<int>>(std::size_t)> search = [&](std::size_t k)
      -> std::optional<std::vector<int>> {
    // Extend the assignment on gens[0..k) to the subgroup they generate, checking consistency.
    std::vector<int> f(g.order(), -1), finv(h.order(), -1);
    f[0] = 0;
    finv[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t s = 0; s < k; ++s) {
        int x = g.mul(queue[i], gens[s]);
        int fx = h.mul(f[static_cast<std::size_t>(queue[i])], img[s]);
        if (f[static_cast<std::size_t>(x)] == -1) {
          if (finv[static_cast<std::size_t>(fx)] != -1) return std::nullopt;
          f[static_cast<std::size_t>(x)] = fx;
          finv[static_cast<std::size_t>(fx)] = x;
          queue.push_back(x);
        } else if (f[static_cast<std::size_t>(x)] != fx) {
          return std::nullopt;
        }
      }
    }
    if (k == gens.size()) {
      if (queue.size() != g.order()) return std::nullopt;
      return f;
    }
    int ord = g.element_order(gens[k]);
    for (std::size_t cand = 1; cand < h.order(); ++cand) {
      if (h.element_order(static_cast<int>(cand)) != ord) continue;
      img[k] = static_cast<int>(cand);
      if (auto r = search(k + 1)) return r;
    }
    img[k] = -1;
    return std::nullopt;
  };
  if (gens.empty()) return std::vector<int>{0};
  return search(0);
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) { return find_isomorphism(g, h).has_value(); }

std::vector<GroupHom> automorphism_action(GroupPtr g, const std::vector<std::vector<int>>& maps) {
  std::vector<GroupHom> out;
  for (const auto& m : maps) {
    auto hom = make_hom(g, g, m);
    if (!hom.injective()) throw ValidationError("map in automorphism family is not bijective");
    out.push_back(std::move(hom));
  }
  return out;
}

}  // namespace lpcusp
