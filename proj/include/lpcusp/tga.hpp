#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "lpcusp/cyclotomic.hpp"
#include "lpcusp/groups.hpp"
#include "lpcusp/linalg.hpp"
#include "lpcusp/reps.hpp"

namespace lpcusp {

/**
 * Normalized 2-cocycle of a finite group with values in mu_m, stored as
 * exponents: value(a, b) = zeta_m^exponent(a, b).
 */
class TwoCocycle {
 public:
  TwoCocycle() = default;

  static TwoCocycle trivial(GroupPtr g);
  /// Validates the cocycle identity and normalizes; throws ValidationError naming a failing triple.
  static TwoCocycle validated(GroupPtr g, int m, std::vector<int> exponents);
  /// Normalizes without checking the cocycle identity; for tables that are cocycles by construction.
  static TwoCocycle unchecked(GroupPtr g, int m, std::vector<int> exponents);
  /// Sparse form: listed (a, b, k) set exponent k, every other pair is 0.
  static TwoCocycle from_sparse(GroupPtr g, int m, const std::vector<std::tuple<int, int, int>>& values);
  /**
   * General nonzero cyclotomic values (flat |G| x |G|). Values that are not roots of unity are
   * rescaled by a coboundary built from square roots of the values at (g, g^-1) when those exist.
   */
  static TwoCocycle from_values(GroupPtr g, const std::vector<Cyclotomic>& values);

  const GroupPtr& group() const { return group_; }
  int m() const { return m_; }
  int exponent(int a, int b) const { return exps_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  RootOfUnity operator()(int a, int b) const { return {m_, exponent(a, b)}; }
  Cyclotomic value(int a, int b) const { return Cyclotomic::zeta(m_, exponent(a, b)); }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_trivial() const;
  /// Same cocycle with the smallest modulus containing all values.
  TwoCocycle reduced() const;
  /// Values written in mu_M for a multiple M of m.
  TwoCocycle lifted(int modulus) const;

  TwoCocycle inverse() const;
  friend TwoCocycle operator*(const TwoCocycle& a, const TwoCocycle& b);
  friend bool operator==(const TwoCocycle& a, const TwoCocycle& b);

 private:
  TwoCocycle(GroupPtr g, int m, std::vector<int> e);
  GroupPtr group_;
  std::size_t n_ = 0;
  int m_ = 1;
  std::vector<int> exps_;
};

/// Pullback along f: H -> G, (a, b) -> c(f a, f b). Covers inflation and restriction.
TwoCocycle pullback(const TwoCocycle& c, const GroupHom& f);

/// Coboundary of beta: (a, b) -> beta(a) beta(b) beta(ab)^-1.
TwoCocycle coboundary(GroupPtr g, const std::vector<RootOfUnity>& beta);

/// The twisted cocycle c * d(beta).
TwoCocycle twist_by(const TwoCocycle& c, const std::vector<RootOfUnity>& beta);

/**
 * beta with c1(a,b)/c2(a,b) = beta(a) beta(b) beta(ab)^-1 when the classes agree.
 * Solved additively over Z/(m |G|) using only the equations at (a, s) for generators s.
 */
std::optional<std::vector<RootOfUnity>> cohomologous(const TwoCocycle& c1, const TwoCocycle& c2);

/// Irreducible module of K[G, c]: a matrix T_g (or only its trace) per element.
struct TGAIrrep {
  TwoCocycle cocycle;
  std::size_t dim = 0;
  std::vector<Cyclotomic> traces;
  std::vector<CycloMatrix> matrices;  // empty in character-only mode

  bool has_matrices() const { return !matrices.empty(); }
  /// Checks T_a T_b = c(a,b) T_ab on all pairs (matrix mode) and T_1 = I.
  bool verify() const;
};

/**
 * Irreducible representations of K[G, c] via the central extension by mu_m with
 * central character z -> z. Matrices are produced when |G| m is within `bound`,
 * otherwise only traces. Ordered by (dimension, trace vector).
 */
std::vector<TGAIrrep> twisted_irreps(const TwoCocycle& c, std::size_t bound = kDefaultMatrixBound);

/// The dual module over c^-1: T_g -> (T_g^-1)^T.
TGAIrrep dual_twisted(const TGAIrrep& v);

/// Index of the irrep in `list` with the same trace vector, or -1.
int find_by_traces(const std::vector<TGAIrrep>& list, const std::vector<Cyclotomic>& traces);

}  // namespace lpcusp
