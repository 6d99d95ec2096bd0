#include "linfty/linmap.hpp"

namespace linfty {

LinMap::LinMap(SpacePtr source, SpacePtr target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), degree_(degree) {
  cols_.reserve(src_->dim());
  for (int i = 0; i < src_->dim(); ++i) cols_.emplace_back(tgt_);
}

LinMap LinMap::identity(SpacePtr space) {
  LinMap m(space, space, 0);
  for (int i = 0; i < space->dim(); ++i) {
    m.set_column(i, Vec::basis_vector(space, i));
  }
  return m;
}

void LinMap::set_column(int i, Vec v) {
  if (!same_space(v.space(), tgt_)) {
    fail(ErrorCode::SpaceMismatch, "column not in the target space");
  }
  cols_.at(i) = std::move(v);
}

Vec LinMap::apply(const Vec& v) const {
  if (!same_space(v.space(), src_)) {
    fail(ErrorCode::SpaceMismatch, "argument not in the source space");
  }
  Vec out(tgt_);
  for (const auto& [i, r] : v.coeffs()) {
    out += r * cols_[i];
  }
  return out;
}

bool LinMap::is_zero() const {
  for (const Vec& c : cols_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

LinMap& LinMap::operator+=(const LinMap& other) {
  if (!same_space(src_, other.src_) || !same_space(tgt_, other.tgt_)) {
    fail(ErrorCode::SpaceMismatch, "map addition across different spaces");
  }
  if (degree_ != other.degree_) {
    fail(ErrorCode::DegreeMismatch, "map addition across different degrees");
  }
  for (int i = 0; i < src_->dim(); ++i) cols_[i] += other.cols_[i];
  return *this;
}

LinMap& LinMap::operator-=(const LinMap& other) {
  if (!same_space(src_, other.src_) || !same_space(tgt_, other.tgt_)) {
    fail(ErrorCode::SpaceMismatch, "map subtraction across different spaces");
  }
  if (degree_ != other.degree_) {
    fail(ErrorCode::DegreeMismatch, "map subtraction across different degrees");
  }
  for (int i = 0; i < src_->dim(); ++i) cols_[i] -= other.cols_[i];
  return *this;
}

LinMap& LinMap::operator*=(const Rat& s) {
  for (Vec& c : cols_) c *= s;
  return *this;
}

bool LinMap::operator==(const LinMap& other) const {
  if (!same_space(src_, other.src_) || !same_space(tgt_, other.tgt_) ||
      degree_ != other.degree_) {
    return false;
  }
  for (int i = 0; i < src_->dim(); ++i) {
    if (!(cols_[i] == other.cols_[i])) return false;
  }
  return true;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (!same_space(g.source(), f.target())) {
    fail(ErrorCode::SpaceMismatch, "composition spaces do not match");
  }
  LinMap out(f.source(), g.target(), f.degree() + g.degree());
  for (int i = 0; i < f.source()->dim(); ++i) {
    out.set_column(i, g.apply(f.column(i)));
  }
  return out;
}

MapReport check_linmap(const LinMap& m) {
  MapReport report;
  const Space& src = *m.source();
  for (int i = 0; i < src.dim(); ++i) {
    const Vec& img = m.column(i);
    if (img.is_zero()) continue;
    int want_degree = src.degree(i) + m.degree();
    if (!img.is_homogeneous(want_degree)) {
      report.defects.push_back({"degree", src.basis(i).name,
                                "image not homogeneous of degree " +
                                    std::to_string(want_degree)});
    }
    if (img.weight() < src.weight(i)) {
      report.defects.push_back(
          {"filtered", src.basis(i).name,
           "image weight " + std::to_string(img.weight()) + " below " +
               std::to_string(src.weight(i))});
    }
  }
  return report;
}

bool raises_weight_by(const LinMap& m, int shift) {
  const Space& src = *m.source();
  for (int i = 0; i < src.dim(); ++i) {
    const Vec& img = m.column(i);
    if (img.is_zero()) continue;
    if (img.weight() < src.weight(i) + shift) return false;
  }
  return true;
}

}  // namespace linfty
