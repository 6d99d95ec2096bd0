#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linfty/errors.hpp"

namespace linfty {

/// Weight of the zero vector; sentinel kept well below INT_MAX so sums of a
/// few weights never overflow.
constexpr int kInfWeight = 1 << 28;

struct BasisElement {
  std::string name;
  int degree = 0;
  int weight = 1;
};

/// Finite-dimensional graded vector space with a finite-length weight
/// filtration: F_k is spanned by the basis elements of weight >= k, so
/// F_1 = everything and F_N = 0. Immutable after construction.
class Space {
 public:
  Space(std::string name, std::vector<BasisElement> basis, int filtration_length);

  const std::string& name() const { return name_; }
  int filtration_length() const { return filtration_length_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(int i) const { return basis_.at(i).degree; }
  int weight(int i) const { return basis_.at(i).weight; }

  /// -1 when absent.
  int index_of(std::string_view element_name) const;

  bool operator==(const Space& other) const;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  int filtration_length_;
  std::unordered_map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr make_space(std::string name, std::vector<BasisElement> basis,
                    int filtration_length);

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace linfty
