#include "linfty/morphism.hpp"

namespace linfty {

InhomOp check_morphism(const InhomOp& phi, const CurvedStructure& source,
                       const CurvedStructure& target, Exec exec) {
  if (phi.degree() != 0) {
    fail(ErrorCode::DegreeMismatch, "a morphism must have degree 0");
  }
  if (!same_space(phi.source(), source.space) ||
      !same_space(phi.target(), target.space)) {
    fail(ErrorCode::SpaceMismatch, "morphism spaces do not match the structures");
  }
  InhomOp residual = hom_differential(phi, source.delta, target.delta);
  residual += bullet(target.lambda, phi, exec);
  residual -= circle(phi, source.lambda, exec);
  return residual;
}

Morphism make_morphism(CurvedStructure source, CurvedStructure target,
                       InhomOp op) {
  InhomOp residual = check_morphism(op, source, target);
  if (!residual.is_zero()) {
    fail(ErrorCode::NotAMorphism, "morphism residual: " + residual.str());
  }
  return Morphism{std::move(source), std::move(target), std::move(op)};
}

Morphism compose_morphisms(const Morphism& psi, const Morphism& phi) {
  if (!same_space(phi.target.space, psi.source.space)) {
    fail(ErrorCode::SpaceMismatch, "morphisms are not composable");
  }
  InhomOp op = bullet(psi.op, phi.op);
  return make_morphism(phi.source, psi.target, std::move(op));
}

Vec mc_residual(const Vec& x, const CurvedStructure& s) {
  if (!same_space(x.space(), s.space)) {
    fail(ErrorCode::SpaceMismatch, "element not in the structure's space");
  }
  if (!x.is_homogeneous(0)) {
    fail(ErrorCode::DegreeMismatch, "Maurer-Cartan candidates have degree 0");
  }
  return s.delta.apply(x) + mc_apply(s.lambda, x);
}

MCElement make_mc_element(CurvedStructure s, Vec x) {
  Vec r = mc_residual(x, s);
  if (!r.is_zero()) {
    fail(ErrorCode::NotMC, "Maurer-Cartan residual: " + r.str());
  }
  return MCElement{std::move(s), std::move(x)};
}

Vec mc_pushforward(const Morphism& phi, const Vec& x) {
  Vec rin = mc_residual(x, phi.source);
  if (!rin.is_zero()) {
    fail(ErrorCode::NotMC, "input residual: " + rin.str());
  }
  Vec y = mc_apply(phi.op, x);
  Vec rout = mc_residual(y, phi.target);
  if (!rout.is_zero()) {
    fail(ErrorCode::OracleMismatch,
         "pushforward output failed Maurer-Cartan re-validation: " + rout.str());
  }
  return y;
}

}  // namespace linfty
