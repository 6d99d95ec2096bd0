#include "linfty/vec.hpp"

#include <sstream>

namespace linfty {

Vec Vec::basis_vector(SpacePtr space, int index) {
  Vec v(std::move(space));
  v.set_coeff(index, Rat(1));
  return v;
}

void Vec::check_index(int i) const {
  if (i < 0 || i >= space_->dim()) {
    fail(ErrorCode::SpaceMismatch,
         "basis index " + std::to_string(i) + " out of range for space '" +
             space_->name() + "'");
  }
}

Rat Vec::coeff(int i) const {
  check_index(i);
  auto it = c_.find(i);
  return it == c_.end() ? Rat(0) : it->second;
}

void Vec::set_coeff(int i, Rat value) {
  check_index(i);
  if (rat_is_zero(value)) {
    c_.erase(i);
  } else {
    c_[i] = std::move(value);
  }
}

void Vec::add_term(int i, const Rat& value) {
  check_index(i);
  auto it = c_.find(i);
  if (it == c_.end()) {
    if (!rat_is_zero(value)) c_.emplace(i, value);
    return;
  }
  it->second += value;
  if (rat_is_zero(it->second)) c_.erase(it);
}

int Vec::weight() const {
  int w = kInfWeight;
  for (const auto& [i, r] : c_) {
    w = std::min(w, space_->weight(i));
  }
  return w;
}

std::optional<int> Vec::degree() const {
  std::optional<int> d;
  for (const auto& [i, r] : c_) {
    int di = space_->degree(i);
    if (!d) {
      d = di;
    } else if (*d != di) {
      return std::nullopt;
    }
  }
  return d;
}

bool Vec::is_homogeneous(int deg) const {
  for (const auto& [i, r] : c_) {
    if (space_->degree(i) != deg) return false;
  }
  return true;
}

Vec& Vec::operator+=(const Vec& other) {
  if (!same_space(space_, other.space_)) {
    fail(ErrorCode::SpaceMismatch, "vector addition across different spaces");
  }
  for (const auto& [i, r] : other.c_) add_term(i, r);
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  if (!same_space(space_, other.space_)) {
    fail(ErrorCode::SpaceMismatch, "vector subtraction across different spaces");
  }
  for (const auto& [i, r] : other.c_) add_term(i, -r);
  return *this;
}

Vec& Vec::operator*=(const Rat& s) {
  if (rat_is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& [i, r] : c_) r *= s;
  return *this;
}

bool Vec::operator==(const Vec& other) const {
  return same_space(space_, other.space_) && c_ == other.c_;
}

std::string Vec::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, r] : c_) {
    if (!first) os << " + ";
    os << rat_str(r) << "*" << space_->basis(i).name;
    first = false;
  }
  return os.str();
}

Rat filtration_distance(const Vec& x, const Vec& y, const Rat& c) {
  if (!same_space(x.space(), y.space())) {
    fail(ErrorCode::SpaceMismatch, "distance between different spaces");
  }
  if (c <= 1) fail(ErrorCode::ParseError, "metric base must exceed 1");
  Vec diff = x - y;
  if (diff.is_zero()) return Rat(0);
  return rat_pow(c, -diff.weight());
}

}  // namespace linfty
