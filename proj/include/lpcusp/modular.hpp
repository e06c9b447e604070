#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lpcusp::modular {

using ModVector = std::vector<long>;
using ModMatrix = std::vector<ModVector>;

long mulmod(long a, long b, long m);
long powmod(long a, long e, long m);
/// Inverse of a modulo m; throws if gcd(a, m) != 1.
long invmod(long a, long m);

bool is_prime(long n);
/// Smallest prime p > lower with p = 1 (mod step).
long prime_congruent_one(long step, long lower);
long primitive_root(long p);

/// Reduced row echelon form in place over F_p; returns pivot columns.
std::vector<std::size_t> rref(ModMatrix& a, std::size_t cols, long p);

/// Basis of {x : A x = 0} over F_p; A is rows x cols.
std::vector<ModVector> nullspace(ModMatrix a, std::size_t cols, long p);
std::size_t rank(ModMatrix a, std::size_t cols, long p);

/// Characteristic polynomial of a square matrix over F_p, lowest degree first, monic.
ModVector charpoly(const ModMatrix& a, long p);
/// Distinct roots of a polynomial over F_p (found by evaluation).
std::vector<long> roots(const ModVector& poly, long p);

/**
 * Some solution of A x = b over Z/M, or empty when none exists.
 * A has `cols` columns; uses a diagonal reduction by unimodular row and
 * column operations so that solvability is decided exactly.
 */
std::optional<ModVector> solve_mod(ModMatrix a, std::size_t cols, ModVector b, long modulus);

}  // namespace lpcusp::modular
