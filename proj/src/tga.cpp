#include "lpcusp/tga.hpp"

#include <algorithm>
#include <random>

#include "lpcusp/error.hpp"
#include "lpcusp/modular.hpp"

namespace lpcusp {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

// Square root of x when x = q * zeta with q a positive rational square and zeta a root of unity.
std::optional<Cyclotomic> exact_sqrt(const Cyclotomic& x) {
  Cyclotomic y = x.normalized();
  long l = lcm_long(2, y.conductor());
  for (long k = 0; k < l; ++k) {
    Cyclotomic q = y * Cyclotomic::zeta(static_cast<int>(l), -k);
    if (!q.is_rational()) continue;
    auto r = rational_sqrt(q.rational_value());
    if (!r) continue;
    return Cyclotomic(*r) * Cyclotomic::zeta(static_cast<int>(2 * l), k);
  }
  return std::nullopt;
}

bool traces_less(const TGAIrrep& a, const TGAIrrep& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    auto c = canonical_compare(a.traces[i], b.traces[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

TwoCocycle::TwoCocycle(GroupPtr g, int m, std::vector<int> e)
    : group_(std::move(g)), n_(group_->order()), m_(m), exps_(std::move(e)) {}

TwoCocycle TwoCocycle::trivial(GroupPtr g) {
  std::size_t n = g->order();
  return TwoCocycle(std::move(g), 1, std::vector<int>(n * n, 0));
}

TwoCocycle TwoCocycle::validated(GroupPtr g, int m, std::vector<int> e) {
  if (m < 1) throw ValidationError("cocycle modulus must be positive");
  std::size_t n = g->order();
  if (e.size() != n * n) throw ValidationError("cocycle table must have |G|^2 entries");
  for (auto& x : e) x = static_cast<int>(mod_floor(x, m));
  const FiniteGroup& G = *g;
  auto at = [&](int a, int b) { return e[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
    long lhs = at(ia, G.mul(ib, ic)) + at(ib, ic);
    long rhs = at(ia, ib) + at(G.mul(ia, ib), ic);
    if (mod_floor(lhs - rhs, m) != 0)
      throw ValidationError("cocycle identity fails at triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0xc0c1);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  return unchecked(std::move(g), m, std::move(e));
}

TwoCocycle TwoCocycle::unchecked(GroupPtr g, int m, std::vector<int> e) {
  int c0 = e[0];
  for (auto& x : e) x = static_cast<int>(mod_floor(x - c0, m));
  return TwoCocycle(std::move(g), m, std::move(e));
}

TwoCocycle TwoCocycle::from_sparse(GroupPtr g, int m, const std::vector<std::tuple<int, int, int>>& values) {
  std::size_t n = g->order();
  std::vector<int> e(n * n, 0);
  for (const auto& [a, b, k] : values) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw ValidationError("cocycle entry index out of range");
    e[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = k;
  }
  return validated(std::move(g), m, std::move(e));
}

TwoCocycle TwoCocycle::from_values(GroupPtr g, const std::vector<Cyclotomic>& values) {
  std::size_t n = g->order();
  if (values.size() != n * n) throw ValidationError("cocycle table must have |G|^2 entries");
  std::vector<Cyclotomic> v = values;
  for (const auto& x : v)
    if (x.is_zero()) throw ValidationError("cocycle value is zero");
  auto to_roots = [&](const std::vector<Cyclotomic>& vals) -> std::optional<TwoCocycle> {
    std::vector<RootOfUnity> roots;
    long m = 1;
    for (const auto& x : vals) {
      auto r = as_root_of_unity(x);
      if (!r) return std::nullopt;
      m = lcm_long(m, r->order);
      roots.push_back(*r);
    }
    std::vector<int> e;
    for (const auto& r : roots) e.push_back(static_cast<int>(r.exponent_in(m)));
    return validated(g, static_cast<int>(m), std::move(e));
  };
  if (auto c = to_roots(v)) return *c;
  Cyclotomic c0 = v[0];
  for (auto& x : v) x = x / c0;
  std::vector<Cyclotomic> beta(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto s = exact_sqrt(v[a * n + static_cast<std::size_t>(g->inv(static_cast<int>(a)))]);
    if (!s) throw ValidationError("cocycle values are not roots of unity and admit no exact square-root rescaling");
    beta[a] = *s;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = static_cast<std::size_t>(g->mul(static_cast<int>(a), static_cast<int>(b)));
      v[a * n + b] = v[a * n + b] * beta[ab] / (beta[a] * beta[b]);
    }
  if (auto c = to_roots(v)) return *c;
  throw ValidationError("cocycle could not be rescaled to root-of-unity values");
}

bool TwoCocycle::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int x) { return x == 0; });
}

TwoCocycle TwoCocycle::reduced() const {
  long g = m_;
  for (int x : exps_) g = gcd_long(g, x);
  if (g == 1) return *this;
  std::vector<int> e = exps_;
  for (auto& x : e) x = static_cast<int>(x / g);
  return TwoCocycle(group_, static_cast<int>(m_ / g), std::move(e));
}

TwoCocycle TwoCocycle::lifted(int modulus) const {
  if (modulus % m_ != 0) throw ValidationError("cocycle modulus does not divide the target modulus");
  std::vector<int> e = exps_;
  for (auto& x : e) x *= modulus / m_;
  return TwoCocycle(group_, modulus, std::move(e));
}

TwoCocycle TwoCocycle::inverse() const {
  std::vector<int> e = exps_;
  for (auto& x : e) x = static_cast<int>(mod_floor(-x, m_));
  return TwoCocycle(group_, m_, std::move(e));
}

TwoCocycle operator*(const TwoCocycle& a, const TwoCocycle& b) {
  if (a.group_->order() != b.group_->order()) throw ValidationError("product of cocycles on different groups");
  int m = static_cast<int>(lcm_long(a.m_, b.m_));
  auto x = a.lifted(m), y = b.lifted(m);
  for (std::size_t i = 0; i < x.exps_.size(); ++i) x.exps_[i] = static_cast<int>(mod_floor(x.exps_[i] + y.exps_[i], m));
  return x.reduced();
}

bool operator==(const TwoCocycle& a, const TwoCocycle& b) {
  if (a.n_ != b.n_) return false;
  auto x = a.reduced(), y = b.reduced();
  return x.m_ == y.m_ && x.exps_ == y.exps_;
}

TwoCocycle pullback(const TwoCocycle& c, const GroupHom& f) {
  if (f.target->order() != c.group()->order()) throw ValidationError("pullback along a map into a different group");
  std::size_t n = f.source->order();
  std::vector<int> e(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) e[a * n + b] = c.exponent(f(static_cast<int>(a)), f(static_cast<int>(b)));
  return TwoCocycle::unchecked(f.source, c.m(), std::move(e));
}

TwoCocycle coboundary(GroupPtr g, const std::vector<RootOfUnity>& beta) {
  std::size_t n = g->order();
  if (beta.size() != n) throw ValidationError("coboundary needs one value per element");
  long m = 1;
  for (const auto& r : beta) m = lcm_long(m, r.order);
  std::vector<int> e(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = static_cast<std::size_t>(g->mul(static_cast<int>(a), static_cast<int>(b)));
      e[a * n + b] = static_cast<int>(mod_floor(beta[a].exponent_in(m) + beta[b].exponent_in(m) - beta[ab].exponent_in(m), m));
    }
  return TwoCocycle::unchecked(std::move(g), static_cast<int>(m), std::move(e)).reduced();
}

TwoCocycle twist_by(const TwoCocycle& c, const std::vector<RootOfUnity>& beta) {
  return c * coboundary(c.group(), beta);
}

std::optional<std::vector<RootOfUnity>> cohomologous(const TwoCocycle& c1, const TwoCocycle& c2) {
  const GroupPtr& g = c1.group();
  if (g->order() != c2.group()->order()) throw ValidationError("cohomologous: cocycles live on different groups");
  std::size_t n = g->order();
  long m = lcm_long(c1.m(), c2.m());
  long big = m * static_cast<long>(n);
  auto x = c1.lifted(static_cast<int>(big)), y = c2.lifted(static_cast<int>(big));
  const auto& gens = g->generators();
  modular::ModMatrix a;
  modular::ModVector rhs;
  // b(1) = 0
  {
    modular::ModVector row(n, 0);
    row[0] = 1;
    a.push_back(row);
    rhs.push_back(0);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (int s : gens) {
      modular::ModVector row(n, 0);
      auto us = static_cast<std::size_t>(g->mul(static_cast<int>(u), s));
      row[u] += 1;
      row[static_cast<std::size_t>(s)] += 1;
      row[us] -= 1;
      a.push_back(row);
      rhs.push_back(x.exponent(static_cast<int>(u), s) - y.exponent(static_cast<int>(u), s));
    }
  auto sol = modular::solve_mod(std::move(a), n, std::move(rhs), big);
  if (!sol) return std::nullopt;
  std::vector<RootOfUnity> beta;
  for (long v : *sol) beta.emplace_back(big, v);
  // Double-check on all pairs.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      auto uv = static_cast<std::size_t>(g->mul(static_cast<int>(u), static_cast<int>(v)));
      long lhs = x.exponent(static_cast<int>(u), static_cast<int>(v)) - y.exponent(static_cast<int>(u), static_cast<int>(v));
      long r = beta[u].exponent_in(big) + beta[v].exponent_in(big) - beta[uv].exponent_in(big);
      if (mod_floor(lhs - r, big) != 0) throw Error("cohomologous: generator equations did not determine the coboundary");
    }
  return beta;
}

bool TGAIrrep::verify() const {
  const GroupPtr& g = cocycle.group();
  if (!has_matrices()) return traces.size() == g->order() && traces[0] == Cyclotomic(static_cast<long>(dim));
  if (!(matrices[0] == CycloMatrix::identity(dim))) return false;
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t b = 0; b < g->order(); ++b) {
      int ia = static_cast<int>(a), ib = static_cast<int>(b);
      auto lhs = matrices[a] * matrices[b];
      auto rhs = cocycle.value(ia, ib) * matrices[static_cast<std::size_t>(g->mul(ia, ib))];
      if (!(lhs == rhs)) return false;
    }
  return true;
}

std::vector<TGAIrrep> twisted_irreps(const TwoCocycle& c_in, std::size_t bound) {
  TwoCocycle c = c_in.reduced();
  const GroupPtr& g = c.group();
  std::size_t n = g->order();
  auto m = static_cast<std::size_t>(c.m());
  std::vector<TGAIrrep> out;
  auto ext = central_extension(g, c.exponents(), c.m());
  const GroupPtr& eg = ext.group;
  bool matrix_mode = n * m <= bound;
  const auto& table = character_table(eg);
  Cyclotomic zm = Cyclotomic::zeta(c.m(), 1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& chi = table[i];
    if (m > 1 && !(chi.at(1) == chi.degree() * zm)) continue;
    TGAIrrep v;
    v.cocycle = c_in;
    v.dim = static_cast<std::size_t>(chi.degree().rational_value().get_num().get_si());
    for (std::size_t gi = 0; gi < n; ++gi) v.traces.push_back(chi.at(static_cast<int>(gi * m)));
    if (matrix_mode) {
      const auto& rho = irreps_matrices(eg, bound)[i];
      for (std::size_t gi = 0; gi < n; ++gi) v.matrices.push_back(rho(static_cast<int>(gi * m)));
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), traces_less);
  std::size_t sum = 0;
  for (const auto& v : out) sum += v.dim * v.dim;
  if (sum != n) throw Error("twisted irreps: dimensions do not square-sum to |G|");
  return out;
}

TGAIrrep dual_twisted(const TGAIrrep& v) {
  const GroupPtr& g = v.cocycle.group();
  TGAIrrep d;
  d.cocycle = v.cocycle.inverse();
  d.dim = v.dim;
  for (std::size_t a = 0; a < g->order(); ++a) {
    int ia = static_cast<int>(a), ainv = g->inv(ia);
    // T_a^-1 = c(a, a^-1)^-1 T_{a^-1}
    Cyclotomic s = v.cocycle.value(ia, ainv).inverse();
    d.traces.push_back(s * v.traces[static_cast<std::size_t>(ainv)]);
    if (v.has_matrices()) d.matrices.push_back((s * v.matrices[static_cast<std::size_t>(ainv)]).transpose());
  }
  return d;
}

int find_by_traces(const std::vector<TGAIrrep>& list, const std::vector<Cyclotomic>& traces) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].traces == traces) return static_cast<int>(i);
  return -1;
}

}  // namespace lpcusp
