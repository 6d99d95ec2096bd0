#include "linfty/space.hpp"

namespace linfty {

Space::Space(std::string name, std::vector<BasisElement> basis,
             int filtration_length)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      filtration_length_(filtration_length) {
  if (filtration_length_ < 1) {
    fail(ErrorCode::WeightOutOfRange, "filtration length must be >= 1");
  }
  for (int i = 0; i < dim(); ++i) {
    const BasisElement& e = basis_[i];
    if (e.weight < 1 || e.weight > filtration_length_ - 1) {
      fail(ErrorCode::WeightOutOfRange,
           "basis element '" + e.name + "' has weight " +
               std::to_string(e.weight) + " outside [1, " +
               std::to_string(filtration_length_ - 1) + "]");
    }
    auto [it, inserted] = index_.emplace(e.name, i);
    (void)it;
    if (!inserted) {
      fail(ErrorCode::DuplicateBasisName, "duplicate basis name '" + e.name + "'");
    }
  }
}

int Space::index_of(std::string_view element_name) const {
  auto it = index_.find(std::string(element_name));
  return it == index_.end() ? -1 : it->second;
}

bool Space::operator==(const Space& other) const {
  if (name_ != other.name_ || filtration_length_ != other.filtration_length_ ||
      basis_.size() != other.basis_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const BasisElement& a = basis_[i];
    const BasisElement& b = other.basis_[i];
    if (a.name != b.name || a.degree != b.degree || a.weight != b.weight) {
      return false;
    }
  }
  return true;
}

SpacePtr make_space(std::string name, std::vector<BasisElement> basis,
                    int filtration_length) {
  return std::make_shared<Space>(std::move(name), std::move(basis),
                                 filtration_length);
}

}  // namespace linfty
