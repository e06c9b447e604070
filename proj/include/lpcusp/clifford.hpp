#pragma once

#include <optional>
#include <vector>

#include "lpcusp/groups.hpp"
#include "lpcusp/reps.hpp"
#include "lpcusp/tga.hpp"

namespace lpcusp {

/// A normal subgroup N of G together with N as a group and its irreducible representations.
struct NormalPair {
  GroupPtr gamma;
  SubgroupHandle n;
  SubgroupGroup n_group;
  std::vector<int> position;  // position[g] = index of g in N, or -1

  static NormalPair make(GroupPtr gamma, SubgroupHandle n);
  const std::vector<Character>& n_characters() const { return character_table(n_group.group); }
  /// Index of gamma . chi_i, where (gamma . chi)(n) = chi(gamma^-1 n gamma).
  int act(int gamma_elem, int irrep_index) const;
};

struct OrbitStabilizer {
  std::vector<int> orbit;      // irrep indices of N, sorted; front() is the canonical representative
  SubgroupHandle stabilizer;   // Gamma_pi inside Gamma
};

OrbitStabilizer orbit_and_stabilizer(const NormalPair& np, int irrep_index);
/// Identifies pi among the irreducibles of N by its character; throws if pi is reducible.
int irrep_index_of(const NormalPair& np, const MatrixRep& pi);

struct CliffordOptions {
  /// Coset representatives of Gamma_pi/N in Gamma, indexed by element of Gamma_pi/N. Empty: lowest index.
  std::vector<int> section;
  /// Use the highest-index representative of each coset instead of the lowest (choice-independence checks).
  bool highest_representatives = false;
  std::size_t bound = kDefaultMatrixBound;
};

struct CliffordDatum {
  NormalPair np;
  int pi_index = 0;
  MatrixRep pi;                    // representation of np.n_group.group
  SubgroupHandle stabilizer;       // Gamma_pi
  GroupPtr quotient;               // Gamma_pi / N
  std::vector<int> label;          // label[g] = element of Gamma_pi/N for g in Gamma_pi, else -1
  std::vector<int> reps;           // representative in Gamma of each element of Gamma_pi/N
  std::vector<CycloMatrix> rep_intertwiners;
  TwoCocycle kappa;                // on Gamma_pi / N

  /// I^g for g in Gamma_pi, with I^(rep n) = I^rep pi(n).
  CycloMatrix intertwiner(int g) const;
  /// pi(n) for n in N given as an element of Gamma.
  const CycloMatrix& pi_at(int n) const;
};

CliffordDatum intertwiner_cocycle(const NormalPair& np, int irrep_index, const CliffordOptions& opts = {});

/// Map from Gamma_pi/N into Gamma/N induced by inclusion.
GroupHom quotient_inclusion(const CliffordDatum& d, const QuotientResult& gamma_mod_n);

/**
 * The module tau x| pi of K[Gamma, natural] (natural inflated from Gamma/N), for tau a module over
 * (natural restricted to Gamma_pi/N) * kappa_pi. Matrices when tau has them, traces always.
 */
TGAIrrep cross_product_rep(const TGAIrrep& tau, const CliffordDatum& d, const TwoCocycle& natural_on_quotient,
                           const QuotientResult& gamma_mod_n);

struct CliffordMatch {
  std::vector<int> orbit;  // irrep indices of N
  int tau = 0;             // index into twisted_irreps of Gamma_pi/N
  std::size_t dim = 0;
  int target = 0;          // index into twisted_irreps(Gamma, natural)
};

struct CliffordReport {
  std::vector<OrbitStabilizer> orbits;
  std::vector<TwoCocycle> kappas;           // per orbit
  std::vector<bool> kappa_trivial_class;    // per orbit
  std::vector<CliffordMatch> matches;
  std::vector<TGAIrrep> targets;
};

/// Matching of (orbit of pi, tau) with Irr K[Gamma, natural]; verifies it is a bijection.
CliffordReport clifford_bijection(GroupPtr gamma, const SubgroupHandle& n, const std::optional<TwoCocycle>& natural_on_quotient,
                                  std::size_t bound = kDefaultMatrixBound);

}  // namespace lpcusp
