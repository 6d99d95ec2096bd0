#pragma once

#include "linfty/linmap.hpp"

namespace linfty {

/// Homological perturbation context: complexes (L, delta) and (M, d) with
/// filtered chain maps f: M -> L, g: L -> M and homotopy h: L -> L[-1]
/// subject to gf = 1, fg + delta h + h delta = 1 and the side conditions
/// h^2 = hf = gh = 0.
struct Context {
  SpacePtr big;    // L
  SpacePtr small;  // M
  LinMap delta;    // on L, degree +1
  LinMap d;        // on M, degree +1
  LinMap f;        // M -> L, degree 0
  LinMap g;        // L -> M, degree 0
  LinMap h;        // L -> L, degree -1
};

struct ContextDefect {
  std::string axiom;
  std::string element;
  std::string defect;  // exact defect vector, printed
};

struct ContextReport {
  std::vector<ContextDefect> defects;
  bool ok() const { return defects.empty(); }
};

/// Evaluates every axiom on every basis element and reports the exact
/// defect vectors; never throws.
ContextReport validate_context(const Context& ctx);

/// Classical perturbation-lemma series for a perturbation mu of delta with
/// (delta + mu)^2 = 0 and mu of strictly positive filtration degree:
///   h_mu = sum (-h mu)^n h          f_mu = sum (-h mu)^n f
///   d_mu = d + sum g (-mu h)^n mu f g_mu = sum g (-mu h)^n
/// The sums are finite: (h mu)^n raises weight by at least n. The output
/// passes validate_context.
Context perturb_context(const Context& ctx, const LinMap& mu);

}  // namespace linfty
