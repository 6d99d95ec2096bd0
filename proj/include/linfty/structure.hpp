#pragma once

#include "linfty/compose.hpp"

namespace linfty {

/// Curved structure: a filtered complex (L, delta) with brackets
/// lambda in S^1(L,L). The structure equation delta_S lambda +
/// lambda o lambda = 0 is the source of truth; a separate
/// delta^2 = 0 check runs only for flat structures (lambda_0 = 0).
struct CurvedStructure {
  SpacePtr space;
  LinMap delta;
  InhomOp lambda;
};

struct StructureReport {
  InhomOp residual;
  bool flat = false;
  bool pronilpotent = false;
  bool delta_square_zero = true;  // evaluated only when flat
  bool ok() const { return residual.is_zero() && (!flat || delta_square_zero); }
};

StructureReport check_structure(const CurvedStructure& s,
                                Exec exec = default_exec());

CurvedStructure make_structure(SpacePtr space, LinMap delta, InhomOp lambda);

/// Graded antisymmetric n-linear map (unshifted brackets live here).
/// Stored on sorted keys; a repeated even-degree element forces zero.
class AntiOp {
 public:
  AntiOp(SpacePtr space, int arity, int degree);

  const SpacePtr& space() const { return space_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const std::map<Key, Vec>& coeffs() const { return c_; }

  void set_term(Key tuple, Vec value);
  Vec eval(std::span<const Vec> args) const;
  Vec eval_pair(const Vec& x, const Vec& y) const;

 private:
  SpacePtr space_;
  int arity_;
  int degree_;
  std::map<Key, Vec> c_;
};

/// The suspension L = G[1]: same basis names and weights, degrees down one.
SpacePtr shift_space(const Space& g, const std::string& name);

/// Transport of a linear map along the index-preserving identification of
/// two spaces with equal dimension.
LinMap transport_linmap(const LinMap& m, SpacePtr new_src, SpacePtr new_tgt);

/// Shifted brackets lambda_n(x_1,...,x_n) =
/// (-1)^(sum (n-i)|x_i|) [s x_1, ..., s x_n] on L = G[1]; the inputs are
/// antisymmetric of degree 2-n on G, the output is symmetric of degree 1.
InhomOp shift_brackets(const std::vector<AntiOp>& brackets, const SpacePtr& l_space);

/// Differential graded Lie algebra presented on the unshifted side.
struct DglaData {
  SpacePtr g_space;
  LinMap differential;  // degree +1 on G
  AntiOp bracket;       // arity 2, degree 0 on G
};

/// L-infinity structure of a DGLA: lambda_2 only, validated through
/// check_structure. Throws StructureInvalid when the residual is nonzero
/// (Jacobi or Leibniz failure); the pro-nilpotence flag is reported by
/// check_structure, not enforced here.
CurvedStructure from_dgla(const DglaData& g, const std::string& name);

}  // namespace linfty
