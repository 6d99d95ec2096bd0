#include "linfty/context.hpp"

namespace linfty {

namespace {

void report_map_equation(ContextReport& report, const std::string& axiom,
                         const LinMap& lhs_minus_rhs) {
  const Space& src = *lhs_minus_rhs.source();
  for (int i = 0; i < src.dim(); ++i) {
    const Vec& defect = lhs_minus_rhs.column(i);
    if (!defect.is_zero()) {
      report.defects.push_back({axiom, src.basis(i).name, defect.str()});
    }
  }
}

void report_check(ContextReport& report, const std::string& which,
                  const LinMap& m, int want_degree) {
  if (m.degree() != want_degree) {
    report.defects.push_back({which + " degree", "-",
                              "declared degree " + std::to_string(m.degree()) +
                                  ", expected " + std::to_string(want_degree)});
  }
  for (const MapDefect& d : check_linmap(m).defects) {
    report.defects.push_back({which + " " + d.axiom, d.element, d.detail});
  }
}

}  // namespace

ContextReport validate_context(const Context& ctx) {
  ContextReport report;
  report_check(report, "delta", ctx.delta, 1);
  report_check(report, "d", ctx.d, 1);
  report_check(report, "f", ctx.f, 0);
  report_check(report, "g", ctx.g, 0);
  report_check(report, "h", ctx.h, -1);

  report_map_equation(report, "delta^2", compose(ctx.delta, ctx.delta));
  report_map_equation(report, "d^2", compose(ctx.d, ctx.d));
  report_map_equation(report, "gf - 1", compose(ctx.g, ctx.f) - LinMap::identity(ctx.small));
  report_map_equation(
      report, "fg + delta h + h delta - 1",
      compose(ctx.f, ctx.g) + compose(ctx.delta, ctx.h) + compose(ctx.h, ctx.delta) -
          LinMap::identity(ctx.big));
  report_map_equation(report, "h^2", compose(ctx.h, ctx.h));
  report_map_equation(report, "hf", compose(ctx.h, ctx.f));
  report_map_equation(report, "gh", compose(ctx.g, ctx.h));
  report_map_equation(report, "delta f - f d", compose(ctx.delta, ctx.f) - compose(ctx.f, ctx.d));
  report_map_equation(report, "g delta - d g", compose(ctx.g, ctx.delta) - compose(ctx.d, ctx.g));
  return report;
}

Context perturb_context(const Context& ctx, const LinMap& mu) {
  if (!same_space(mu.source(), ctx.big) || !same_space(mu.target(), ctx.big)) {
    fail(ErrorCode::SpaceMismatch, "perturbation must act on the big complex");
  }
  if (mu.degree() != 1) {
    fail(ErrorCode::DegreeMismatch, "perturbation must have degree +1");
  }
  LinMap delta_mu = ctx.delta + mu;
  if (!compose(delta_mu, delta_mu).is_zero()) {
    fail(ErrorCode::NotSquareZero, "(delta + mu)^2 != 0");
  }
  if (!raises_weight_by(mu, 1)) {
    fail(ErrorCode::NotPositiveFiltration,
         "perturbation does not strictly raise the filtration");
  }

  const int big_n = ctx.big->filtration_length();
  LinMap hm = Rat(-1) * compose(ctx.h, mu);   // -h mu, raises weight
  LinMap mh = Rat(-1) * compose(mu, ctx.h);   // -mu h, raises weight

  // h_mu = sum (-h mu)^n h ; f_mu = sum (-h mu)^n f
  LinMap h_mu = ctx.h;
  LinMap f_mu = ctx.f;
  LinMap pow = LinMap::identity(ctx.big);
  for (int n = 1; n <= big_n; ++n) {
    pow = compose(hm, pow);
    if (pow.is_zero()) break;
    h_mu += compose(pow, ctx.h);
    f_mu += compose(pow, ctx.f);
  }

  // g_mu = sum g (-mu h)^n ; d_mu = d + sum g (-mu h)^n mu f
  LinMap g_mu = ctx.g;
  LinMap d_mu = ctx.d + compose(ctx.g, compose(mu, ctx.f));
  pow = LinMap::identity(ctx.big);
  for (int n = 1; n <= big_n; ++n) {
    pow = compose(pow, mh);
    if (pow.is_zero()) break;
    g_mu += compose(ctx.g, pow);
    d_mu += compose(ctx.g, compose(pow, compose(mu, ctx.f)));
  }

  Context out{ctx.big, ctx.small, delta_mu, d_mu, f_mu, g_mu, h_mu};
  ContextReport check = validate_context(out);
  if (!check.ok()) {
    fail(ErrorCode::InvalidContext,
         "perturbed context failed re-validation: " + check.defects.front().axiom);
  }
  return out;
}

}  // namespace linfty
