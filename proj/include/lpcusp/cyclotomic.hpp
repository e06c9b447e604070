#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpcusp {

/// Arbitrary precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
/// num/den in lowest terms; den must be nonzero.
Rational frac(long num, long den);
std::string to_string(const Rational& q);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_floor(long a, long m);
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

/**
 * Exact element of the cyclotomic field Q(zeta_n).
 *
 * The value is stored on the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n),
 * reduced modulo the n-th cyclotomic polynomial. Binary operations lift both
 * operands to the lcm of their conductors. Results are not eagerly descended
 * to the minimal conductor; `normalized()` does that and is what printing,
 * hashing-for-output and ordering use.
 */
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(long v) : n_(1), c_{Rational(v)} {}  // NOLINT(implicit)
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}  // NOLINT(implicit)
  Cyclotomic(const Rational& q) : n_(1), c_{q} {}  // NOLINT(implicit)

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic zeta(int n, long k = 1);
  /// sum_i dense[i] * zeta_n^i; dense may have any length.
  static Cyclotomic from_dense(int n, std::vector<Rational> dense);
  /// Parses the textual form "c0 + c1*z(e)^1 + ...".
  static Cyclotomic parse(std::string_view text);

  int conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;

  Cyclotomic lifted(int n) const;
  Cyclotomic normalized() const;

  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conj() const { return galois(-1); }
  /// The automorphism zeta_n -> zeta_n^k, k coprime to the conductor.
  Cyclotomic galois(long k) const;
  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order on canonical (normalized) forms: by conductor, then coefficients.
  friend std::strong_ordering canonical_compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Hash of the stored representation; equal values hash equally only at equal conductor.
  std::size_t raw_hash() const;

  std::string to_string() const;

 private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  static std::vector<Rational> reduce(int n, std::vector<Rational> dense);

  int n_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// zeta_m^k; `order` is m and exponent is reduced to [0, m) in lowest terms.
struct RootOfUnity {
  long order = 1;
  long exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(long m, long k);

  Cyclotomic value() const { return Cyclotomic::zeta(static_cast<int>(order), exponent); }
  RootOfUnity inverse() const { return {order, -exponent}; }
  /// Exponent of this root expressed in mu_M; requires order | M.
  long exponent_in(long modulus) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Returns (m,k) with a = zeta_m^k in lowest terms, or empty if a is not a root of unity.
std::optional<RootOfUnity> as_root_of_unity(const Cyclotomic& a);

enum class CycloOp { add, mul, inv, conj };

/// Single entry point for the four field operations; `b` is ignored for unary ops.
/// Inverting zero throws ValidationError.
Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp op);

}  // namespace lpcusp
