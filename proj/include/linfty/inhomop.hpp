#pragma once

#include "linfty/symop.hpp"

namespace linfty {

/// Arity-indexed family of graded symmetric filtered maps: an element of
/// S^i(L, M). The arity-0 part is a vector of positive weight; components of
/// arity >= N (N the target filtration length) vanish identically, so the
/// family is stored up to arity N-1 with no truncation error.
class InhomOp {
 public:
  InhomOp(SpacePtr source, SpacePtr target, int degree);

  static InhomOp identity(SpacePtr space);

  const SpacePtr& source() const { return src_; }
  const SpacePtr& target() const { return tgt_; }
  int degree() const { return degree_; }

  /// Largest stored arity.
  int cap() const { return static_cast<int>(parts_.size()); }

  const Vec& part0() const { return part0_; }
  void set_part0(Vec v);

  /// Arity-n component, 1 <= n <= cap().
  const SymOp& part(int n) const { return parts_.at(n - 1); }
  SymOp& part(int n) { return parts_.at(n - 1); }

  bool is_zero() const;

  InhomOp& operator+=(const InhomOp& other);
  InhomOp& operator-=(const InhomOp& other);
  InhomOp& operator*=(const Rat& s);
  friend InhomOp operator+(InhomOp a, const InhomOp& b) { return a += b; }
  friend InhomOp operator-(InhomOp a, const InhomOp& b) { return a -= b; }
  friend InhomOp operator*(const Rat& s, InhomOp a) { return a *= s; }
  friend InhomOp operator-(InhomOp a) { return a *= Rat(-1); }
  bool operator==(const InhomOp& other) const;

  std::string str() const;

 private:
  SpacePtr src_;
  SpacePtr tgt_;
  int degree_;
  Vec part0_;
  std::vector<SymOp> parts_;
};

/// Arity-1 embedding of a linear map.
InhomOp embed_linmap(const LinMap& m);

/// Operator with only an arity-0 part; x must be homogeneous.
InhomOp const_op(SpacePtr source, const Vec& x);

/// Largest k such that every component sends F_{k_1} x ... x F_{k_n} into
/// F_{k_1+...+k_n+k}; kInfWeight for the zero operator.
int s_filtration_degree(const InhomOp& a);

/// Hom-complex differential: (delta a)_n(x_1,...,x_n) =
///   d_tgt(a_n(x_1,...,x_n))
///   - (-1)^|a| sum_j (-1)^(|x_1|+...+|x_{j-1}|) a_n(x_1,...,delta_src x_j,...,x_n).
InhomOp hom_differential(const InhomOp& a, const LinMap& delta_src,
                         const LinMap& d_tgt);

/// Post-composition m(a(...)) with a linear map on the target side.
InhomOp linmap_post(const LinMap& m, const InhomOp& a);

}  // namespace linfty
