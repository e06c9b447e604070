#include "lpcusp/modular.hpp"

#include <numeric>
#include <utility>

#include "lpcusp/cyclotomic.hpp"
#include "lpcusp/error.hpp"

namespace lpcusp::modular {

long mulmod(long a, long b, long m) {
  long r = static_cast<long>((static_cast<__int128>(a) * b) % m);
  return r < 0 ? r + m : r;
}

long powmod(long a, long e, long m) {
  long r = 1 % m;
  a = mod_floor(a, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

// Returns g = gcd(a, b) and s, t with s a + t b = g.
long ext_gcd(long a, long b, long& s, long& t) {
  long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    long q = a / b;
    long r = a - q * b;
    a = b;
    b = r;
    long ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

}  // namespace

long invmod(long a, long m) {
  long s = 0, t = 0;
  long g = ext_gcd(mod_floor(a, m), m, s, t);
  if (g != 1) throw Error("element not invertible modulo " + std::to_string(m));
  return mod_floor(s, m);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long prime_congruent_one(long step, long lower) {
  long p = (lower / step + 1) * step + 1;
  while (!is_prime(p)) p += step;
  return p;
}

long primitive_root(long p) {
  long phi = p - 1;
  std::vector<long> factors;
  long n = phi;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long f : factors)
      if (powmod(g, phi / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

std::vector<std::size_t> rref(ModMatrix& a, std::size_t cols, long p) {
  std::vector<std::size_t> piv;
  std::size_t r = 0, rows = a.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && a[k][c] == 0) ++k;
    if (k == rows) continue;
    std::swap(a[k], a[r]);
    long inv = invmod(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        a[i][j] = mod_floor(a[i][j] - mulmod(f, a[r][j], p), p);
      }
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<ModVector> nullspace(ModMatrix a, std::size_t cols, long p) {
  auto piv = rref(a, cols, p);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    ModVector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod_floor(-a[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(ModMatrix a, std::size_t cols, long p) { return rref(a, cols, p).size(); }

ModVector charpoly(const ModMatrix& in, long p) {
  // Reduce to upper Hessenberg form by similarity, then use the standard recurrence.
  std::size_t n = in.size();
  ModMatrix h = in;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h[piv][k] == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
    }
    long inv = invmod(h[k + 1][k], p);
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h[i][k] == 0) continue;
      long f = mulmod(h[i][k], inv, p);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = mod_floor(h[i][j] - mulmod(f, h[k + 1][j], p), p);
      for (std::size_t j = 0; j < n; ++j) h[j][k + 1] = (h[j][k + 1] + mulmod(f, h[j][i], p)) % p;
    }
  }
  // polys[k] = charpoly of leading k x k block.
  std::vector<ModVector> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    ModVector pk(k + 1, 0);
    // (x - h[k-1][k-1]) * polys[k-1]
    for (std::size_t i = 0; i < polys[k - 1].size(); ++i) {
      pk[i + 1] = (pk[i + 1] + polys[k - 1][i]) % p;
      pk[i] = mod_floor(pk[i] - mulmod(h[k - 1][k - 1], polys[k - 1][i], p), p);
    }
    long prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      std::size_t row = k - i;  // 1-based index k-i+1 -> 0-based k-i
      prod = mulmod(prod, h[row][row - 1], p);
      long coef = mulmod(prod, h[row - 1][k - 1], p);
      if (coef == 0) continue;
      const auto& q = polys[row - 1];
      for (std::size_t j = 0; j < q.size(); ++j) pk[j] = mod_floor(pk[j] - mulmod(coef, q[j], p), p);
    }
    polys[k] = std::move(pk);
  }
  return polys[n];
}

std::vector<long> roots(const ModVector& poly, long p) {
  std::vector<long> out;
  for (long x = 0; x < p; ++x) {
    long v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (mulmod(v, x, p) + poly[i]) % p;
    if (v == 0) out.push_back(x);
  }
  return out;
}

std::optional<ModVector> solve_mod(ModMatrix a, std::size_t cols, ModVector b, long m) {
  std::size_t rows = a.size();
  for (auto& row : a)
    for (auto& x : row) x = mod_floor(x, m);
  for (auto& x : b) x = mod_floor(x, m);
  ModMatrix v(cols, ModVector(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1 % m;

  auto row_op = [&](std::size_t r1, std::size_t r2, long s, long t, long u, long w) {
    // (r1, r2) <- (s r1 + t r2, u r1 + w r2)
    for (std::size_t j = 0; j < cols; ++j) {
      long x = a[r1][j], y = a[r2][j];
      a[r1][j] = mod_floor(mulmod(s, x, m) + mulmod(t, y, m), m);
      a[r2][j] = mod_floor(mulmod(u, x, m) + mulmod(w, y, m), m);
    }
    long x = b[r1], y = b[r2];
    b[r1] = mod_floor(mulmod(s, x, m) + mulmod(t, y, m), m);
    b[r2] = mod_floor(mulmod(u, x, m) + mulmod(w, y, m), m);
  };
  auto col_op = [&](std::size_t c1, std::size_t c2, long s, long t, long u, long w) {
    for (std::size_t i = 0; i < rows; ++i) {
      long x = a[i][c1], y = a[i][c2];
      a[i][c1] = mod_floor(mulmod(s, x, m) + mulmod(t, y, m), m);
      a[i][c2] = mod_floor(mulmod(u, x, m) + mulmod(w, y, m), m);
    }
    for (std::size_t i = 0; i < cols; ++i) {
      long x = v[i][c1], y = v[i][c2];
      v[i][c1] = mod_floor(mulmod(s, x, m) + mulmod(t, y, m), m);
      v[i][c2] = mod_floor(mulmod(u, x, m) + mulmod(w, y, m), m);
    }
  };

  std::size_t t = 0;
  std::vector<long> diag;
  while (t < rows && t < cols) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows && pr == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    if (pr != t) row_op(t, pr, 0, 1, 1, 0);
    if (pc != t) col_op(t, pc, 0, 1, 1, 0);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        long s = 0, u = 0;
        long x = a[t][t], y = a[i][t];
        long g = y % x == 0 ? (s = 1, x) : ext_gcd(x, y, s, u);
        row_op(t, i, s, u, -(y / g), x / g);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        long s = 0, u = 0;
        long x = a[t][t], y = a[t][j];
        long g = y % x == 0 ? (s = 1, x) : ext_gcd(x, y, s, u);
        col_op(t, j, s, u, -(y / g), x / g);
        dirty = true;
      }
      if (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0) dirty = true;
      }
    }
    diag.push_back(a[t][t]);
    ++t;
  }
  for (std::size_t i = t; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  ModVector y(cols, 0);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    long d = diag[i];
    long g = std::gcd(d, m);
    if (b[i] % g != 0) return std::nullopt;
    long mg = m / g;
    y[i] = mg == 1 ? 0 : mulmod((b[i] / g) % mg, invmod(d / g, mg), mg);
  }
  ModVector x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    long acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc = mod_floor(acc + mulmod(v[i][j], y[j], m), m);
    x[i] = acc;
  }
  return x;
}

}  // namespace lpcusp::modular
