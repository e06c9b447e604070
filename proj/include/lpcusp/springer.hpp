#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpcusp/clifford.hpp"
#include "lpcusp/groups.hpp"
#include "lpcusp/reps.hpp"
#include "lpcusp/tga.hpp"

namespace lpcusp {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// Sorts into weakly decreasing order; throws ValidationError on a non-positive part.
Partition make_partition(std::vector<int> parts);
int total(const Partition& p);
std::string to_string(const Partition& p);
/// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions(int n);
long partition_count(int n);
/// Number of pairs of partitions of total size k.
long bipartition_count(int k);

enum class ClassicalType { GL, SLmod, Sp, SO_odd, SO_even, O, Spin, HSpin };

std::string to_string(ClassicalType t);
/// Accepts GL, A, SL, SLmod, Sp, C, SO_odd, B, SO_even, D, O, Spin, HSpin.
ClassicalType parse_classical_type(const std::string& s);

/// Parity rules on Jordan types: Sp needs odd parts with even multiplicity, SO/O need even parts with even multiplicity.
bool valid_partition(ClassicalType t, const Partition& p);

struct UnipotentClass {
  ClassicalType type = ClassicalType::GL;
  int n = 0;
  int k = 0;  // SLmod only
  Partition lambda;
};

std::vector<UnipotentClass> unipotent_classes(ClassicalType t, int n, int k = 0);

/**
 * A_G(u) with its normal part A_{G°}(u). For Sp/O/SO the group is elementary abelian with
 * generators named z_a (or products z_a z_b for SO); for SLmod(k) it is cyclic of order gcd(k, parts).
 */
struct ComponentGroup {
  GroupPtr group;
  SubgroupHandle identity_part;
  std::vector<int> generators;          // elements of `group`
  std::vector<std::string> generator_names;
  std::vector<std::vector<int>> generator_parts;  // parts a whose z_a make up each generator
};

ComponentGroup component_group(ClassicalType t, const Partition& lambda, int k = 0);

/// Signs of the z_a (distinct odd parts for O/SO, distinct even parts for Sp), ascending in a.
using SignPattern = std::vector<int>;

struct CuspidalPair {
  ClassicalType type = ClassicalType::GL;
  int n = 0;
  Partition lambda;
  int depth = 0;            // staircase depth d
  SignPattern signs;        // on z_a for a in the staircase, ascending
  SignPattern restricted;   // values on the generators of component_group(type, lambda)
  int central_order = 1;    // SLmod: order of the central character
};

/**
 * Cuspidal pairs by the staircase rules. SO types list both O-level patterns; they restrict to the
 * same character of A_SO(u). Spin and HSpin throw NotSupported.
 */
std::vector<CuspidalPair> cuspidal_pairs(ClassicalType t, int n, int k = 0);

/// Cuspidality of (lambda, eps) with eps given by its values on component_group(t, lambda).generators.
bool is_cuspidal_pair(ClassicalType t, const Partition& lambda, const SignPattern& generator_values);

struct CensusTerm {
  std::string label;
  long value = 0;
};

struct CensusResult {
  ClassicalType type = ClassicalType::GL;
  int n = 0;
  long lhs = 0;
  long rhs = 0;
  std::vector<CensusTerm> lhs_terms;  // per unipotent class: |Irr A(u)|
  std::vector<CensusTerm> rhs_terms;  // per cuspidal support: pairs on the tail * |Irr W_t|
  bool ok() const { return lhs == rhs; }
};

/// Sum over unipotent classes of |Irr A(u)| against the sum over cuspidal supports of |Irr W_t|.
CensusResult census(ClassicalType t, int n);

/// Ambient group containing A_G(u), the normal part A_{G°}(u), a representation eps of the normal part and a section.
struct SectionDatum {
  GroupPtr ambient;
  SubgroupHandle normal;
  MatrixRep eps;                  // on as_group(normal)
  std::vector<int> representatives;  // one element of `ambient` per coset, any order
};

struct SectionCocycle {
  QuotientResult quotient;
  std::vector<int> section;  // section[q] = representative of coset q
  TwoCocycle natural;        // on quotient.group
};

/// natural(a, b) = scalar by which eps acts on s(a) s(b) s(ab)^-1.
SectionCocycle cocycle_from_section(const SectionDatum& d);

struct SectionCocycleCheck {
  TwoCocycle kappa;            // intertwiner cocycle of eps on the stabilizer quotient
  TwoCocycle natural;          // section cocycle restricted to the stabilizer quotient
  bool kappa_trivial = false;
  bool natural_trivial = false;
  bool matches_inverse = false;  // kappa ~ natural^-1
  bool matches_direct = false;   // kappa ~ natural
};

SectionCocycleCheck compare_section_cocycles(const SectionDatum& d);

/// Signed permutations of k letters, as permutations of 2k points; `even` keeps an even number of sign changes.
GroupPtr hyperoctahedral(int k, bool even = false);

struct WeylDatum {
  std::string type;  // "A", "B", "C", "D" or "1"
  int rank = 0;
  GroupPtr w_circ;
  GroupPtr w_t;               // equals w_circ unless the ambient group is disconnected
  SubgroupHandle w_circ_in_t;
  std::vector<int> complement;  // R_t inside w_t, a complement to w_circ stabilizing the positive system
};

/**
 * Levi GL_1^k x tail inside the ambient classical group. Both are given as (type, n) with n the size of
 * the natural representation; O ambient with zero tail gives W_t = W(B_k) over W(D_k).
 */
WeylDatum weyl_datum(ClassicalType ambient, int ambient_n, int gl_count, int tail_n);

/// One row of a generalized Springer table: (lambda, eta) -> (GL_1^k x tail, v, q-eps).
struct SpringerEntry {
  Partition lambda;
  SignPattern eta;          // values on component_group generators
  int gl_count = 0;
  Partition tail_v;
  SignPattern tail_signs;   // values on component_group generators of the tail class
};

struct SpringerTable {
  ClassicalType type = ClassicalType::Sp;
  int n = 0;
  std::vector<SpringerEntry> entries;
  std::optional<SpringerEntry> lookup(const Partition& lambda, const SignPattern& eta) const;
};

/**
 * Entries forced by counting: cuspidal pairs map to themselves, and when only one cuspidal-support
 * level exists every pair maps there. Returns the forced part (possibly incomplete).
 */
SpringerTable builtin_springer_table(ClassicalType t, int n);

}  // namespace lpcusp
