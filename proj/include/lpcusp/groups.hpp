#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lpcusp/cyclotomic.hpp"

namespace lpcusp {

/// Permutation of {0..n-1} as the image array: p[i] is the image of i.
using Perm = std::vector<int>;

/**
 * Monomial matrix: row i has the single nonzero entry val[i] in column col[i].
 * Entries are roots of unity, which is forced for matrices of finite order.
 */
struct MonomialMatrix {
  std::vector<int> col;
  std::vector<RootOfUnity> val;

  std::size_t dim() const { return col.size(); }
  static MonomialMatrix identity(std::size_t n);
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Builds a monomial matrix from sparse (row, col, value) triples; rejects non-monomial input.
MonomialMatrix monomial_from_entries(std::size_t dim, const std::vector<std::tuple<int, int, Cyclotomic>>& entries);

enum class GroupKind { trivial, perm, monomial, table, product, quotient, extension };

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Largest order for which a full multiplication table is stored.
inline constexpr std::size_t kMaxTableOrder = 4096;
inline constexpr std::size_t kDefaultOrderBound = 1000000;

/**
 * Finite group on element indices 0..order-1 with 0 the identity.
 *
 * Groups are immutable once built and are always handled through GroupPtr.
 * Conjugacy classes are sorted by (size, minimal element).
 */
class FiniteGroup {
 public:
  std::size_t order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int pow(int a, long k) const;
  /// h g h^-1
  int conj(int g, int h) const { return mul(mul(h, g), inv(h)); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  const std::vector<int>& generators() const { return gens_; }
  /// Word in the generator list (indices into generators()) evaluating to g.
  const std::vector<int>& word(int g) const { return words_[static_cast<std::size_t>(g)]; }

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[static_cast<std::size_t>(g)]; }
  int element_order(int g) const { return elt_order_[static_cast<std::size_t>(g)]; }
  long exponent() const { return exponent_; }
  bool is_abelian() const;

  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  /// Realizations, when the group was built from permutations or monomial matrices.
  const std::vector<Perm>& perms() const { return perms_; }
  const std::vector<MonomialMatrix>& matrices() const { return mats_; }
  std::optional<int> find_perm(const Perm& p) const;
  std::optional<int> find_matrix(const MonomialMatrix& m) const;

  /// Factors (product), parent (quotient) or base (extension).
  const std::vector<GroupPtr>& related() const { return related_; }

  static GroupPtr trivial();
  static GroupPtr from_table(const std::vector<std::vector<int>>& table, std::string name = "table");
  static GroupPtr from_perms(const std::vector<Perm>& gens, std::size_t bound = kDefaultOrderBound);
  static GroupPtr from_monomials(const std::vector<MonomialMatrix>& gens, std::size_t bound = kDefaultOrderBound);

  static GroupPtr cyclic(int n);
  /// Dihedral group of order 2n acting on an n-gon.
  static GroupPtr dihedral(int n);
  static GroupPtr symmetric(int n);
  static GroupPtr alternating(int n);
  /// (Z/2)^r with element index = bit mask.
  static GroupPtr elementary_abelian2(int r);
  /// Q8 generated by diag(i,-i) and antidiag(i,i).
  static GroupPtr quaternion();

  /// Lazily computed data owned by the group (character table, irreps), keyed by slot.
  template <class T, class Make>
  const T& cached(std::size_t slot, Make&& make) const {
    {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      if (slot < cache_.size() && cache_[slot]) return *static_cast<const T*>(cache_[slot].get());
    }
    // Computed outside the lock: construction may consult other slots of the same group.
    auto value = std::make_shared<T>(make());
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (cache_.size() <= slot) cache_.resize(slot + 1);
    if (!cache_[slot]) cache_[slot] = value;
    return *static_cast<const T*>(cache_[slot].get());
  }

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 1;
  std::vector<int> table_{0};
  std::vector<int> inv_{0};
  std::vector<int> gens_;
  std::vector<std::vector<int>> words_{{}};
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> elt_order_;
  long exponent_ = 1;
  GroupKind kind_ = GroupKind::trivial;
  std::string name_ = "trivial";
  std::vector<Perm> perms_;
  std::vector<MonomialMatrix> mats_;
  std::vector<GroupPtr> related_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::shared_ptr<void>> cache_;

  friend GroupPtr make_group_from_table(std::vector<int> table, std::size_t n, GroupKind kind, std::string name,
                                        std::vector<GroupPtr> related);
};

/// Builds a group from a flat table without re-validating group axioms (internal constructions).
GroupPtr make_group_from_table(std::vector<int> table, std::size_t n, GroupKind kind, std::string name,
                               std::vector<GroupPtr> related = {});

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;

  int operator()(int g) const { return image[static_cast<std::size_t>(g)]; }
  std::vector<int> kernel() const;
  bool injective() const;
};

/// Validates f(xy) = f(x)f(y) on all x and generators y; throws ValidationError otherwise.
GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> image);

struct SubgroupHandle {
  GroupPtr parent;
  std::vector<int> elements;  // sorted; contains 0
  bool normal = false;

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const;
  /// Position of g in `elements`, or -1.
  int position(int g) const;
};

/// Checks closure; computes the normality flag.
SubgroupHandle make_subgroup(GroupPtr g, std::vector<int> elements);
SubgroupHandle generated_subgroup(GroupPtr g, const std::vector<int>& gens);
SubgroupHandle whole_group(GroupPtr g);
SubgroupHandle trivial_subgroup(GroupPtr g);
bool is_normal(const FiniteGroup& g, const std::vector<int>& elements);

/// The subgroup as a group in its own right, with element i = elements[i], and its embedding.
struct SubgroupGroup {
  GroupPtr group;
  GroupHom embedding;
};
SubgroupGroup as_group(const SubgroupHandle& h);

struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
  std::vector<int> coset_reps;  // lowest index in each coset, indexed by quotient element
};
QuotientResult quotient(GroupPtr g, const SubgroupHandle& n);

struct ExtensionResult {
  GroupPtr group;        // element index = gamma * m + z
  GroupHom projection;   // onto the base
  SubgroupHandle center; // mu_m = {0..m-1}
  int m = 1;
};
/**
 * Central extension of `base` by mu_m with (z,g)(z',g') = (z+z'+c(g,g'), gg'),
 * where c is a flat |G|x|G| table of exponents of zeta_m.
 */
ExtensionResult central_extension(GroupPtr base, const std::vector<int>& exponents, int m);

/// Element index g * |H| + h.
GroupPtr direct_product(GroupPtr g, GroupPtr h);

SubgroupHandle centralizer(GroupPtr g, int x);
SubgroupHandle center(GroupPtr g);
SubgroupHandle normalizer(GroupPtr g, const std::vector<int>& elements);

/// Some isomorphism g -> h as an image array, or empty. Intended for small groups.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Validates a family of maps as automorphisms of g and returns them as homomorphisms.
std::vector<GroupHom> automorphism_action(GroupPtr g, const std::vector<std::vector<int>>& maps);

}  // namespace lpcusp
