#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpcusp/groups.hpp"
#include "lpcusp/tga.hpp"

namespace lpcusp {

/**
 * A finite Gamma-set X with a cocycle kappa_x on each isotropy group and connecting maps
 *   phi_{g,x}(T_a) = lambda_{g,x}(a) T_{g a g^-1}  : K[Gamma_x, kappa_x] -> K[Gamma_gx, kappa_gx].
 * Missing scalars default to 1.
 */
struct ActionDatum {
  std::vector<std::string> labels;
  GroupPtr gamma;
  std::vector<int> action;                      // action[g * |X| + x] = g.x
  std::vector<SubgroupHandle> stabilizers;      // Gamma_x
  std::vector<SubgroupGroup> stabilizer_groups; // Gamma_x as groups, element i = stabilizers[x].elements[i]
  std::vector<TwoCocycle> kappa;                // on stabilizer_groups[x].group
  std::map<std::pair<int, int>, std::vector<RootOfUnity>> scalars;  // (g, x) -> lambda indexed by position in Gamma_x

  /// Validates the action and fills the isotropy groups; cocycles start trivial.
  static ActionDatum make(std::vector<std::string> labels, GroupPtr gamma, std::vector<int> action);

  std::size_t size() const { return labels.size(); }
  int act(int g, int x) const { return action[static_cast<std::size_t>(g) * size() + static_cast<std::size_t>(x)]; }
  RootOfUnity lambda(int g, int x, int a) const;

  /// Sets kappa_x; the cocycle must live on stabilizer_groups[x].group.
  void set_kappa(int x, TwoCocycle c);
  /// Sets lambda_{g,x}; one value per element of Gamma_x (in position order).
  void set_scalars(int g, int x, std::vector<RootOfUnity> values);

  /// Checks that each phi_{g,x} is an algebra map, that the composition law holds, that kappa_gx and
  /// g_* kappa_x are cohomologous, and that phi_{g,x} is inner for g in Gamma_x. Throws ValidationError.
  void validate(std::size_t bound = kDefaultMatrixBound) const;
};

/// Trace vector (indexed by Gamma_gx positions) of rho o phi_{g,x}^-1, given the traces of rho on Gamma_x.
std::vector<Cyclotomic> transport_traces(const ActionDatum& d, int g, int x, const std::vector<Cyclotomic>& traces);

struct QuotientPoint {
  int x = 0;                        // orbit representative: smallest index in the Gamma-orbit of the pair
  int rho = 0;                      // index into twisted_irreps(kappa_x)
  std::size_t dim = 0;
  std::vector<Cyclotomic> traces;   // on Gamma_x
  std::size_t orbit_size = 0;       // number of pairs (x', rho') in the orbit
};

struct ExtendedQuotient {
  std::vector<QuotientPoint> points;
  std::vector<std::vector<int>> x_orbits;  // Gamma-orbits on X, sorted
  std::vector<std::size_t> fiber_sizes;    // per x-orbit
};

ExtendedQuotient build_extended_quotient(const ActionDatum& d, std::size_t bound = kDefaultMatrixBound);

/// Irr K[Gamma_r, kappa_r] at the orbit representative r of x, reached by transporting Irr K[Gamma_x, kappa_x].
std::vector<std::vector<Cyclotomic>> fiber_over(const ActionDatum& d, int x, std::size_t bound = kDefaultMatrixBound);

}  // namespace lpcusp
