#pragma once

#include <span>
#include <vector>

#include "linfty/symop.hpp"

namespace linfty {

/// Scalar over the exterior extension Q[eps]/(eps^2) with eps of degree -1:
/// body + soul*eps, (p + q eps)(r + s eps) = pr + (ps + qr) eps.
struct EpsScalar {
  Rat body;
  Rat soul;

  EpsScalar() : body(0), soul(0) {}
  EpsScalar(Rat b, Rat s) : body(std::move(b)), soul(std::move(s)) {}

  EpsScalar& operator+=(const EpsScalar& o) {
    body += o.body;
    soul += o.soul;
    return *this;
  }
  friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
  friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
    return EpsScalar(a.body * b.body, a.body * b.soul + a.soul * b.body);
  }
  bool operator==(const EpsScalar& o) const {
    return body == o.body && soul == o.soul;
  }
};

/// Vector over the eps-extension, stored as value = body + eps*soul with the
/// generator kept on the left. A nominally degree-d EpsVec has a degree-d
/// body and a degree-(d+1) soul.
struct EpsVec {
  Vec body;
  Vec soul;

  explicit EpsVec(SpacePtr space) : body(space), soul(std::move(space)) {}
  EpsVec(Vec b, Vec s) : body(std::move(b)), soul(std::move(s)) {}

  bool is_zero() const { return body.is_zero() && soul.is_zero(); }

  EpsVec& operator+=(const EpsVec& o) {
    body += o.body;
    soul += o.soul;
    return *this;
  }
  EpsVec& operator*=(const Rat& s) {
    body *= s;
    soul *= s;
    return *this;
  }
  friend EpsVec operator*(const Rat& s, EpsVec v) { return v *= s; }
};

/// Evaluation of a graded symmetric map on eps-extended arguments. Pulling
/// eps out of slot j to the left crosses the map and the preceding
/// arguments, contributing (-1)^(|a| + |v_1| + ... + |v_{j-1}|).
EpsVec eval_eps(const SymOp& a, std::span<const EpsVec> args,
                const std::vector<int>& nominal_degrees);

}  // namespace linfty
