#pragma once

#include <vector>

#include "linfty/vec.hpp"

namespace linfty {

/// Linear map stored column-wise: one target vector per source basis element.
/// Construction does not validate; check_linmap reports degree-homogeneity
/// and filtered-ness defects so planted violations stay representable.
class LinMap {
 public:
  LinMap(SpacePtr source, SpacePtr target, int degree);

  static LinMap identity(SpacePtr space);
  static LinMap zero(SpacePtr source, SpacePtr target, int degree) {
    return LinMap(std::move(source), std::move(target), degree);
  }

  const SpacePtr& source() const { return src_; }
  const SpacePtr& target() const { return tgt_; }
  int degree() const { return degree_; }

  const Vec& column(int i) const { return cols_.at(i); }
  void set_column(int i, Vec v);

  Vec apply(const Vec& v) const;

  bool is_zero() const;

  LinMap& operator+=(const LinMap& other);
  LinMap& operator-=(const LinMap& other);
  LinMap& operator*=(const Rat& s);
  friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }
  friend LinMap operator-(LinMap a, const LinMap& b) { return a -= b; }
  friend LinMap operator*(const Rat& s, LinMap m) { return m *= s; }
  bool operator==(const LinMap& other) const;

 private:
  SpacePtr src_;
  SpacePtr tgt_;
  int degree_;
  std::vector<Vec> cols_;
};

/// g after f.
LinMap compose(const LinMap& g, const LinMap& f);

struct MapDefect {
  std::string axiom;    // "degree" or "filtered"
  std::string element;  // source basis name
  std::string detail;
};

struct MapReport {
  std::vector<MapDefect> defects;
  bool ok() const { return defects.empty(); }
};

MapReport check_linmap(const LinMap& m);

/// True when every column raises weight by at least `shift` beyond the
/// source weight (the zero column passes).
bool raises_weight_by(const LinMap& m, int shift);

}  // namespace linfty
