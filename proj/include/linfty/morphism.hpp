#pragma once

#include "linfty/structure.hpp"

namespace linfty {

/// L-infinity morphism phi between curved structures, an element of
/// S^0(L, M) with delta phi + mu . phi - phi o lambda = 0.
struct Morphism {
  CurvedStructure source;
  CurvedStructure target;
  InhomOp op;
};

/// Morphism residual delta phi + mu . phi - phi o lambda; zero iff morphism.
InhomOp check_morphism(const InhomOp& phi, const CurvedStructure& source,
                       const CurvedStructure& target,
                       Exec exec = default_exec());

Morphism make_morphism(CurvedStructure source, CurvedStructure target,
                       InhomOp op);

/// Underlying operator bullet(psi, phi); the result is re-validated
/// (NotAMorphism on failure, which the composition proposition rules out
/// for valid inputs).
Morphism compose_morphisms(const Morphism& psi, const Morphism& phi);

/// delta x + sum (1/n!) lambda_n(x,...,x) for x of degree 0, weight >= 1.
Vec mc_residual(const Vec& x, const CurvedStructure& s);

struct MCElement {
  CurvedStructure structure;
  Vec value;
};

MCElement make_mc_element(CurvedStructure s, Vec x);

/// Image phi_0 + sum (1/n!) phi_n(x,...,x) of a Maurer-Cartan element; the
/// output residual is re-checked exactly.
Vec mc_pushforward(const Morphism& phi, const Vec& x);

}  // namespace linfty
