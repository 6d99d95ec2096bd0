#pragma once

#include <map>
#include <optional>

#include "linfty/rational.hpp"
#include "linfty/space.hpp"

namespace linfty {

/// Sparse vector with exact rational coefficients over a fixed space.
/// Zero coefficients are never stored, so map equality is vector equality.
class Vec {
 public:
  explicit Vec(SpacePtr space) : space_(std::move(space)) {}

  static Vec basis_vector(SpacePtr space, int index);

  const SpacePtr& space() const { return space_; }
  const std::map<int, Rat>& coeffs() const { return c_; }

  Rat coeff(int i) const;
  void set_coeff(int i, Rat value);
  void add_term(int i, const Rat& value);

  bool is_zero() const { return c_.empty(); }

  /// Largest k with the vector in F_k: the minimum basis weight over the
  /// support; kInfWeight for the zero vector.
  int weight() const;

  /// Degree when homogeneous and nonzero; nullopt for zero or mixed.
  std::optional<int> degree() const;

  /// The zero vector is homogeneous of every degree.
  bool is_homogeneous(int deg) const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Rat& s);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rat& s, Vec v) { return v *= s; }
  friend Vec operator-(Vec a) { return a *= Rat(-1); }

  bool operator==(const Vec& other) const;

  std::string str() const;

 private:
  void check_index(int i) const;

  SpacePtr space_;
  std::map<int, Rat> c_;
};

/// Ultrametric distance c^(-weight(x-y)) with c > 1; exactly 0 when x = y.
Rat filtration_distance(const Vec& x, const Vec& y, const Rat& c);

}  // namespace linfty
