#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "linfty/koszul.hpp"
#include "linfty/linmap.hpp"

namespace linfty {

/// Multiset of source basis indices, kept sorted ascending.
using Key = std::vector<int>;

int key_weight(const Space& space, const Key& key);
int key_degree(const Space& space, const Key& key);

/// Graded symmetry forces the coefficient at a key containing a repeated
/// odd-degree element to vanish.
bool key_forced_zero(const Space& space, const Key& key);

/// Sorts a tuple of basis indices ascending, returning the Koszul sign of
/// the reordering.
std::pair<Key, int> sort_with_sign(Key tuple, const Space& space);

/// All sorted keys of the given arity with total weight <= max_weight,
/// enumerated in lexicographic order.
std::vector<Key> keys_up_to_weight(const Space& space, int arity, int max_weight);

/// Graded symmetric filtered n-linear map, stored on multisets so symmetry
/// is a storage invariant; evaluation reconstructs the Koszul signs.
/// set_term validates degree homogeneity, filtered-ness, and the forced
/// vanishing on repeated odd elements, so a SymOp is valid by construction.
class SymOp {
 public:
  SymOp(SpacePtr source, SpacePtr target, int arity, int degree);

  const SpacePtr& source() const { return src_; }
  const SpacePtr& target() const { return tgt_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }

  const std::map<Key, Vec>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient at a sorted key; zero vector when absent.
  Vec coeff(const Key& key) const;
  const Vec* find(const Key& key) const;

  /// Assigns value at the multiset given by `tuple` (any order); the Koszul
  /// sign of sorting is applied to the value.
  void set_term(Key tuple, Vec value);

  /// Accumulating variant of set_term.
  void add_term(Key tuple, Vec value);

  /// Multilinear graded-symmetric evaluation.
  Vec eval(std::span<const Vec> args) const;

  /// Evaluation on a sorted tuple of basis elements (no sign needed).
  Vec eval_basis(const Key& sorted_key) const;

  bool operator==(const SymOp& other) const;

 private:
  void validate_value(const Key& key, const Vec& value) const;

  SpacePtr src_;
  SpacePtr tgt_;
  int arity_;
  int degree_;
  std::map<Key, Vec> c_;
};

}  // namespace linfty
