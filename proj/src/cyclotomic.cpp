#include "lpcusp/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lpcusp/error.hpp"

namespace lpcusp {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw ValidationError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw ValidationError("malformed rational literal '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

Rational frac(long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational q(num);
  q /= den;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }
long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

// Quotient of integer polynomials; divisor is monic.
std::vector<long> exact_divide(std::vector<long> num, const std::vector<long>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long t = num[i];
    q[i - dn] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= t * den[j];
  }
  return q;
}

std::vector<Rational> trim(std::vector<Rational> p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
  return p;
}

bool poly_is_zero(const std::vector<Rational>& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Polynomial division over Q: returns (quotient, remainder).
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                    const std::vector<Rational>& b) {
  a = trim(std::move(a));
  if (a.size() < b.size()) return {{Rational(0)}, a};
  std::vector<Rational> q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (sgn(a[i]) == 0) continue;
    Rational t = a[i] / lead;
    q[i - b.size() + 1] = t;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= t * b[j];
  }
  a.resize(b.size() > 1 ? b.size() - 1 : 1);
  return {q, trim(a)};
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trim(std::move(a));
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

// Solve sum_j y_j * cols[j] = target over Q; empty if inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> cols,
                                                     const std::vector<Rational>& target) {
  std::size_t rows = target.size(), nc = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(nc + 1));
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  for (std::size_t i = 0; i < rows; ++i) m[i][nc] = target[i];
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k <= nc; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k <= nc; ++k) m[i][k] -= f * m[r][k];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m[i][nc]) != 0) return std::nullopt;
  std::vector<Rational> y(nc);
  for (std::size_t i = 0; i < r; ++i) y[pivcol[i]] = m[i][nc];
  return y;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  std::lock_guard<std::mutex> lock(poly_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed without recursion into the lock.
  std::map<int, std::vector<long>> local;
  for (int d : divisors(n)) {
    auto cached = cache.find(d);
    if (cached != cache.end()) {
      local[d] = *cached->second;
      continue;
    }
    std::vector<long> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (int e : divisors(d))
      if (e < d) p = exact_divide(std::move(p), local.at(e));
    local[d] = p;
    cache[d] = std::make_unique<std::vector<long>>(p);
  }
  return *cache.at(n);
}

std::vector<Rational> Cyclotomic::reduce(int n, std::vector<Rational> dense) {
  if (dense.size() > static_cast<std::size_t>(n)) {
    for (std::size_t i = static_cast<std::size_t>(n); i < dense.size(); ++i)
      dense[i % static_cast<std::size_t>(n)] += dense[i];
    dense.resize(static_cast<std::size_t>(n));
  }
  const auto& phi = cyclotomic_polynomial(n);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (sgn(dense[i]) == 0) continue;
    Rational t = dense[i];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) dense[i - deg + j] -= t * phi[j];
    dense[i] = 0;
  }
  dense.resize(deg);
  return dense;
}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  if (n < 1) throw ValidationError("cyclotomic conductor must be positive");
  std::vector<Rational> dense(static_cast<std::size_t>(n));
  dense[static_cast<std::size_t>(mod_floor(k, n))] = 1;
  return {n, reduce(n, std::move(dense))};
}

Cyclotomic Cyclotomic::from_dense(int n, std::vector<Rational> dense) {
  if (n < 1) throw ValidationError("cyclotomic conductor must be positive");
  return {n, reduce(n, std::move(dense))};
}

bool Cyclotomic::is_zero() const { return poly_is_zero(c_); }

bool Cyclotomic::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw ValidationError("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::lifted(int n) const {
  if (n == n_) return *this;
  if (n % n_ != 0) throw ValidationError("cannot lift Q(zeta_" + std::to_string(n_) + ") to Q(zeta_" +
                                         std::to_string(n) + ")");
  if (is_rational()) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(n)));
    c[0] = c_[0];
    return {n, std::move(c)};
  }
  std::size_t step = static_cast<std::size_t>(n / n_);
  std::vector<Rational> dense(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c_.size(); ++i) dense[i * step] = c_[i];
  return {n, reduce(n, std::move(dense))};
}

Cyclotomic Cyclotomic::normalized() const {
  if (is_rational()) return Cyclotomic(c_[0]);
  for (int d : divisors(n_)) {
    if (d == 1 || d == n_ || d % 4 == 2) continue;
    std::vector<std::vector<Rational>> cols;
    int pd = euler_phi(d);
    for (int j = 0; j < pd; ++j) cols.push_back(zeta(d, j).lifted(n_).c_);
    if (auto y = solve_rational(cols, c_)) return {d, std::move(*y)};
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (gcd_long(mod_floor(k, n_), n_) != 1 && n_ > 1)
    throw ValidationError("galois exponent must be coprime to the conductor");
  if (is_rational()) return *this;
  std::vector<Rational> dense(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    dense[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * k, n_))] += c_[i];
  return {n_, reduce(n_, std::move(dense))};
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ValidationError("inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic(Rational(1 / c_[0]));
  // Extended Euclid in Q[x] against Phi_n.
  const auto& phi = cyclotomic_polynomial(n_);
  std::vector<Rational> r0(phi.begin(), phi.end()), r1 = trim(c_);
  std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = poly_divmod(r0, r1);
    auto s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_n is irreducible.
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return {n_, reduce(n_, std::move(s1))};
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int l = static_cast<int>(lcm_long(n_, o.n_));
    if (l != n_) *this = lifted(l);
    if (l != o.n_) return *this += o.lifted(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int l = static_cast<int>(lcm_long(n_, o.n_));
    if (l != n_) *this = lifted(l);
    if (l != o.n_) return *this -= o.lifted(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_rational() && b.is_rational() && a.n_ == 1 && b.n_ == 1) return Cyclotomic(Rational(a.c_[0] * b.c_[0]));
  if (a.n_ == 1 || (a.is_rational() && b.n_ % a.n_ == 0)) {
    if (sgn(a.c_[0]) == 0) return Cyclotomic();
    Cyclotomic r = b;
    for (auto& x : r.c_) x *= a.c_[0];
    return r;
  }
  if (b.n_ == 1 || (b.is_rational() && a.n_ % b.n_ == 0)) return b * a;
  int l = static_cast<int>(lcm_long(a.n_, b.n_));
  const Cyclotomic& x = a.n_ == l ? a : a.lifted(l);
  Cyclotomic ytmp;
  const Cyclotomic* y = &b;
  if (b.n_ != l) {
    ytmp = b.lifted(l);
    y = &ytmp;
  }
  std::vector<Rational> prod(x.c_.size() + y->c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < y->c_.size(); ++j) {
      if (sgn(y->c_[j]) == 0) continue;
      prod[i + j] += x.c_[i] * y->c_[j];
    }
  }
  return {l, Cyclotomic::reduce(l, std::move(prod))};
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  int l = static_cast<int>(lcm_long(a.n_, b.n_));
  return a.lifted(l).c_ == b.lifted(l).c_;
}

std::strong_ordering canonical_compare(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a.normalized(), y = b.normalized();
  if (x.n_ != y.n_) return x.n_ <=> y.n_;
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Cyclotomic::raw_hash() const {
  std::size_t h = std::hash<int>{}(n_);
  for (const auto& q : c_) {
    h ^= std::hash<std::string>{}(q.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Cyclotomic::to_string() const {
  Cyclotomic x = normalized();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << x.c_[i].get_str();
    if (i > 0) out << "*z(" << x.n_ << ")^" << i;
  }
  if (first) return "0";
  return out.str();
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::string s(text);
  Cyclotomic result;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("malformed cyclotomic '" + std::string(text) + "': " + why);
  };
  while (pos <= s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t star = term.find("*z(");
    if (star == std::string::npos) {
      result += Cyclotomic(parse_rational(term));
    } else {
      Rational coeff = parse_rational(term.substr(0, star));
      std::size_t close = term.find(")^", star);
      if (close == std::string::npos) fail("expected ')^' in term '" + term + "'");
      int e = 0;
      long k = 0;
      try {
        e = std::stoi(term.substr(star + 3, close - star - 3));
        k = std::stol(term.substr(close + 2));
      } catch (const std::exception&) {
        fail("bad conductor or exponent in term '" + term + "'");
      }
      if (e < 1) fail("conductor must be positive");
      result += Cyclotomic(coeff) * zeta(e, k);
    }
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return result;
}

RootOfUnity::RootOfUnity(long m, long k) {
  if (m < 1) throw ValidationError("root of unity order must be positive");
  k = mod_floor(k, m);
  long g = gcd_long(k, m);
  if (k == 0) g = m;
  order = m / g;
  exponent = k / g;
}

long RootOfUnity::exponent_in(long modulus) const {
  if (modulus % order != 0)
    throw ValidationError("root of unity of order " + std::to_string(order) + " is not in mu_" +
                          std::to_string(modulus));
  return exponent * (modulus / order);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  long l = lcm_long(a.order, b.order);
  return {l, a.exponent_in(l) + b.exponent_in(l)};
}

std::optional<RootOfUnity> as_root_of_unity(const Cyclotomic& a) {
  if (a.is_zero()) return std::nullopt;
  Cyclotomic x = a.normalized();
  long n = x.conductor();
  long l = lcm_long(2, n);
  // The roots of unity in Q(zeta_n) are exactly mu_lcm(2,n).
  for (long k = 0; k < l; ++k) {
    if (Cyclotomic::zeta(static_cast<int>(l), k) == x) return RootOfUnity(l, k);
  }
  return std::nullopt;
}

Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp op) {
  switch (op) {
    case CycloOp::add:
      return a + b;
    case CycloOp::mul:
      return a * b;
    case CycloOp::inv:
      return a.inverse();
    case CycloOp::conj:
      return a.conj();
  }
  throw ValidationError("unknown cyclotomic operation");
}

}  // namespace lpcusp
