#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "lpcusp/cyclotomic.hpp"
#include "lpcusp/groups.hpp"
#include "lpcusp/linalg.hpp"

namespace lpcusp {

inline constexpr std::size_t kDefaultMatrixBound = 200;

/// Class function, one value per conjugacy class of `group` in the order of group->classes().
struct Character {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& degree() const { return values.front(); }
  const Cyclotomic& at(int g) const { return values[static_cast<std::size_t>(group->class_of(g))]; }
  Character conj() const;
  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// (1/|G|) sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const Character& a, const Character& b);

/// Irreducible characters, trivial first, then by (degree, values in canonical order). Cached per group.
const std::vector<Character>& character_table(const GroupPtr& g);

/// Exact representation of a finite group, one matrix per element.
class MatrixRep {
 public:
  MatrixRep() = default;
  MatrixRep(GroupPtr group, std::vector<CycloMatrix> mats);

  /// Extends images of group->generators() to all elements along generator words.
  static MatrixRep from_generators(GroupPtr group, const std::vector<CycloMatrix>& gen_images);
  /// One-dimensional representation from a linear character.
  static MatrixRep from_linear(const Character& chi);
  static MatrixRep trivial(GroupPtr group, std::size_t dim = 1);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const CycloMatrix& operator()(int g) const { return mats_[static_cast<std::size_t>(g)]; }
  const std::vector<CycloMatrix>& matrices() const { return mats_; }

  Character character() const;
  /// Checks rho(x) rho(s) = rho(xs) for every x and generator s, and rho(1) = I.
  bool is_homomorphism() const;

 private:
  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<CycloMatrix> mats_;
};

/// Explicit irreducible representations, aligned with character_table(g). Cached per group.
const std::vector<MatrixRep>& irreps_matrices(const GroupPtr& g, std::size_t bound = kDefaultMatrixBound);

/// Representation of the source of `embedding` obtained by composing.
MatrixRep restrict(const MatrixRep& rho, const GroupHom& embedding);
/// Induced representation along an injective homomorphism H -> G.
MatrixRep induce(const MatrixRep& pi, const GroupHom& embedding);
Character restrict(const Character& chi, const GroupHom& embedding);
Character induce(const Character& psi, const GroupHom& embedding);

/// Basis of {T : T rho1(g) = rho2(g) T for all g}.
std::vector<CycloMatrix> hom_space(const MatrixRep& rho1, const MatrixRep& rho2);

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);
MatrixRep tensor(const MatrixRep& a, const MatrixRep& b);
/// Contragredient: g -> rho(g^-1)^T.
MatrixRep dual(const MatrixRep& rho);

}  // namespace lpcusp
