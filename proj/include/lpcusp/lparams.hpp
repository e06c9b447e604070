#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lpcusp/cyclotomic.hpp"
#include "lpcusp/extquot.hpp"
#include "lpcusp/groups.hpp"
#include "lpcusp/springer.hpp"

namespace lpcusp {

enum class Duality { Orth, Symp, ConjOrth, ConjSymp, None };
std::string to_string(Duality d);
Duality parse_duality(const std::string& s);

/// Unramified twist |.|^s times zeta at Frobenius.
struct Twist {
  Rational s{0};
  RootOfUnity zeta;

  bool is_zero() const { return sgn(s) == 0 && zeta.exponent == 0; }
  friend Twist operator+(const Twist& a, const Twist& b) { return {a.s + b.s, a.zeta * b.zeta}; }
  friend bool operator==(const Twist& a, const Twist& b) { return a.s == b.s && a.zeta == b.zeta; }
  friend bool operator<(const Twist& a, const Twist& b);
};
std::string to_string(const Twist& t);

/// Irreducible W_F-representation: identified by (core, twist); `id` is display only.
struct WeilLabel {
  std::string id;
  int dim = 1;
  Duality duality = Duality::None;
  std::string core;
  Twist twist;

  friend bool same_label(const WeilLabel& a, const WeilLabel& b) { return a.core == b.core && a.twist == b.twist; }
};

/// mult copies of label (x) S_a.
struct Block {
  WeilLabel label;
  int a = 1;
  int mult = 1;
};

enum class GroupKindL { GLinner, Sp, SOodd, SOeven, U };
std::string to_string(GroupKindL k);

/// n is the size of the natural representation of H (GLinner: n = m d for GL_m(D)).
struct GroupDescriptor {
  GroupKindL kind = GroupKindL::GLinner;
  int n = 1;
  int d = 1;  // GLinner only

  /// Dimension of the natural representation of the dual group.
  int dual_dim() const;
};

/**
 * Characters of S_phi: signs on z_{core,a} (classical and unitary), and an exponent j of the
 * cyclic S_phi = Z/g for GLinner (rho(c) = zeta_g^j).
 */
struct Enhancement {
  std::map<std::pair<std::string, int>, int> signs;
  long cyclic = 0;
  friend bool operator==(const Enhancement&, const Enhancement&) = default;
};

struct LParameter {
  GroupDescriptor group;
  std::vector<Block> blocks;
};

struct EnhancedParameter {
  LParameter phi;
  Enhancement rho;
};

/// Checks dimension and duality parity, merges equal labels with equal a, and sorts blocks canonically.
LParameter validate(const LParameter& phi);

/// Factor of Z_{H^vee}(phi(W_F)) carried by one label core.
struct CentralizerFactor {
  std::string core;
  ClassicalType type = ClassicalType::GL;  // GL, Sp or O
  int dim = 1;                             // dim of the label
  Partition lambda;                        // Jordan type of u_phi on the multiplicity space
};

std::vector<CentralizerFactor> centralizer_factors(const LParameter& phi);

struct ComponentGroupTower {
  GroupPtr s_group;
  SubgroupHandle z_group;   // image of the designated central subgroup
  QuotientResult r_group;   // S_phi / Z_phi
  /// Named generators of S_phi: (core, a) for the z's, ("", 0) for the GLinner generator c.
  std::vector<std::pair<std::string, int>> generator_names;
  std::vector<int> generators;
  std::vector<int> masks;   // element of S_phi -> bitmask over generator_names (classical and unitary)
  int cyclic_order = 1;     // GLinner: |S_phi|
};

ComponentGroupTower s_group(const LParameter& phi);

bool is_discrete(const LParameter& phi);
bool is_bounded(const LParameter& phi);

/// Value of rho on an element of S_phi (as a root of unity).
RootOfUnity character_value(const ComponentGroupTower& t, const Enhancement& rho, int element);
/// rho restricted to Z_phi, as a root of unity on the generator of Z_phi (GLinner: on c).
RootOfUnity central_character(const LParameter& phi, const Enhancement& rho);

/**
 * Relevance for the inner form recorded by zeta. GLinner: with zeta given, zeta_rho must equal it;
 * without, zeta_rho must have order exactly d. Other groups: the designated central subgroup is trivial,
 * so rho is relevant iff zeta is trivial.
 */
bool is_relevant(const EnhancedParameter& p, const std::optional<RootOfUnity>& zeta = std::nullopt);

bool is_cuspidal(const EnhancedParameter& p);

struct CuspidalDatum {
  GroupDescriptor group;
  std::vector<int> levi;      // sizes of the GL factors of the dual Levi
  int tail_n = 0;             // size of the classical tail of the dual Levi
  EnhancedParameter on_levi;  // the cuspidal parameter on the Levi
};

/**
 * Sc(phi, rho). Type A: pi (x) S_a splits into a/e copies of pi (x) S_e, e the order of rho, with the
 * SL_2 torus offsets added to the twists. Classical: per centralizer factor through a SpringerTable
 * (user tables first, then the forced built-in entries); throws NotSupported when a factor is unresolved.
 * `on_levi.phi.blocks` lists the GL part (duality None) followed by the tail.
 */
CuspidalDatum cuspidal_support(const EnhancedParameter& p, const std::vector<SpringerTable>& tables = {});

/// Cuspidality relative to the datum's own Levi: each GL factor and the tail are cuspidal.
bool is_cuspidal_datum(const CuspidalDatum& cd);

/// (core, dim, s + half-integer offset, zeta) for every eigenline of the SL_2 torus.
std::vector<std::tuple<std::string, int, Rational, RootOfUnity>> infinitesimal_multiset(const LParameter& phi);

struct StandardTriple {
  std::vector<int> levi;                // GL factor sizes (dual), ordered by decreasing s
  std::vector<Rational> z;              // s value per Levi factor, strictly decreasing
  std::vector<LParameter> bounded;      // bounded parameter per Levi factor
  Enhancement rho;
  GroupDescriptor group;
};

StandardTriple standard_triple(const EnhancedParameter& p);
EnhancedParameter assemble(const StandardTriple& st);
/// The bounded parameter of each Levi factor with rho transferred to its S-group.
std::vector<EnhancedParameter> standard_triple_factors(const StandardTriple& st);

struct LeviFactor {
  std::string core;
  int dim = 1;
  int a = 1;             // SL_2 block of the cuspidal factor
  Duality duality = Duality::None;
  friend auto operator<=>(const LeviFactor&, const LeviFactor&) = default;
};

struct InertialClass {
  GroupDescriptor group;
  std::vector<LeviFactor> factors;   // canonical order
  std::vector<Block> tail;           // classical tail with twists cleared
  Enhancement tail_rho;
  long cyclic = 0;                   // enhancement exponent on the GL part (GLinner)
  GroupPtr w;                        // W_{s^vee}, acting on factor positions
  std::vector<Perm> w_perms;         // action of each element of w on factor positions

  friend bool operator==(const InertialClass& a, const InertialClass& b) {
    return a.group.kind == b.group.kind && a.group.n == b.group.n && a.group.d == b.group.d && a.factors == b.factors &&
           a.cyclic == b.cyclic && a.tail_rho == b.tail_rho && a.tail.size() == b.tail.size();
  }
};

InertialClass inertial_class(const CuspidalDatum& cd);
InertialClass bernstein_component(const EnhancedParameter& p, const std::vector<SpringerTable>& tables = {});

struct ComponentPoint {
  std::vector<Twist> twists;        // per Levi factor
  QuotientPoint point;
  std::optional<EnhancedParameter> parameter;  // type A: the enhanced parameter this point corresponds to
};

struct ComponentQuotient {
  ActionDatum datum;
  ExtendedQuotient quotient;
  std::vector<ComponentPoint> points;
  bool cocycle_trivial = true;
};

/**
 * Twisted extended quotient over the W_{s^vee}-orbit of the twist point `base` (default: all zero).
 * Type A: isotropy groups are products of symmetric groups with trivial cocycle, and each point is sent
 * to an enhanced parameter by the Springer correspondence for GL.
 */
ComponentQuotient component_extended_quotient(const InertialClass& s, const std::vector<Twist>& base = {});

/// Extended quotient for a class whose W_{s^vee} and cocycle come from section data (single point).
ComponentQuotient component_extended_quotient(const SectionDatum& extension, const std::string& label);

/// Character of S_k at a permutation with the given cycle type (Murnaghan-Nakayama).
long symmetric_character(const Partition& lambda, const Partition& cycle_type);

}  // namespace lpcusp
