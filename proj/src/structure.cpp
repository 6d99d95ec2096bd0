#include "linfty/structure.hpp"

namespace linfty {

CurvedStructure make_structure(SpacePtr space, LinMap delta, InhomOp lambda) {
  if (!same_space(delta.source(), space) || !same_space(delta.target(), space) ||
      !same_space(lambda.source(), space) || !same_space(lambda.target(), space)) {
    fail(ErrorCode::SpaceMismatch, "structure data on mismatched spaces");
  }
  if (delta.degree() != 1) {
    fail(ErrorCode::DegreeMismatch, "differential must have degree +1");
  }
  if (lambda.degree() != 1) {
    fail(ErrorCode::DegreeMismatch, "brackets must have degree 1");
  }
  return CurvedStructure{std::move(space), std::move(delta), std::move(lambda)};
}

StructureReport check_structure(const CurvedStructure& s, Exec exec) {
  if (s.lambda.degree() != 1 || s.delta.degree() != 1) {
    fail(ErrorCode::DegreeMismatch, "structure data of wrong degree");
  }
  StructureReport report{
      hom_differential(s.lambda, s.delta, s.delta) + circle(s.lambda, s.lambda, exec),
      s.lambda.part0().is_zero(),
      s_filtration_degree(s.lambda) >= 1,
      true};
  if (report.flat) {
    report.delta_square_zero = compose(s.delta, s.delta).is_zero();
  }
  return report;
}

AntiOp::AntiOp(SpacePtr space, int arity, int degree)
    : space_(std::move(space)), arity_(arity), degree_(degree) {
  if (arity_ < 0) fail(ErrorCode::ArityMismatch, "negative arity");
}

namespace {

/// Sorts ascending, counting (sign of the permutation) x (Koszul sign).
std::pair<Key, int> sort_with_anti_sign(Key tuple, const Space& space) {
  int par = 0;
  const int n = static_cast<int>(tuple.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n - i; ++j) {
      if (tuple[j] > tuple[j + 1]) {
        par += 1 + parity(space.degree(tuple[j])) * parity(space.degree(tuple[j + 1]));
        std::swap(tuple[j], tuple[j + 1]);
      }
    }
  }
  return {std::move(tuple), (par % 2 == 0) ? 1 : -1};
}

bool anti_key_forced_zero(const Space& space, const Key& key) {
  for (std::size_t j = 0; j + 1 < key.size(); ++j) {
    // swap of equal entries gives -(-1)^(|x||x|); even degree forces zero
    if (key[j] == key[j + 1] && parity(space.degree(key[j])) == 0) return true;
  }
  return false;
}

}  // namespace

void AntiOp::set_term(Key tuple, Vec value) {
  if (static_cast<int>(tuple.size()) != arity_) {
    fail(ErrorCode::ArityMismatch, "key size does not match arity");
  }
  if (!same_space(value.space(), space_)) {
    fail(ErrorCode::SpaceMismatch, "coefficient not in the bracket space");
  }
  auto [key, sign] = sort_with_anti_sign(std::move(tuple), *space_);
  if (sign < 0) value *= Rat(-1);
  if (!value.is_zero() && anti_key_forced_zero(*space_, key)) {
    fail(ErrorCode::SymmetryViolation,
         "nonzero antisymmetric coefficient on a repeated even-degree element");
  }
  if (!value.is_zero() &&
      !value.is_homogeneous(key_degree(*space_, key) + degree_)) {
    fail(ErrorCode::DegreeMismatch, "bracket value of wrong degree");
  }
  if (value.is_zero()) {
    c_.erase(key);
  } else {
    c_[key] = std::move(value);
  }
}

Vec AntiOp::eval(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    fail(ErrorCode::ArityMismatch, "wrong number of arguments");
  }
  Vec out(space_);
  Key tuple(arity_, 0);
  std::function<void(int, Rat)> walk = [&](int slot, Rat scalar) {
    if (slot == arity_) {
      auto [key, sign] = sort_with_anti_sign(tuple, *space_);
      if (anti_key_forced_zero(*space_, key)) return;
      auto it = c_.find(key);
      if (it == c_.end()) return;
      Rat s = scalar;
      if (sign < 0) s = -s;
      out += s * it->second;
      return;
    }
    for (const auto& [i, r] : args[slot].coeffs()) {
      tuple[slot] = i;
      walk(slot + 1, scalar * r);
    }
  };
  walk(0, Rat(1));
  return out;
}

Vec AntiOp::eval_pair(const Vec& x, const Vec& y) const {
  std::vector<Vec> args{x, y};
  return eval(args);
}

SpacePtr shift_space(const Space& g, const std::string& name) {
  std::vector<BasisElement> basis = g.basis();
  for (BasisElement& e : basis) e.degree -= 1;
  return make_space(name, std::move(basis), g.filtration_length());
}

LinMap transport_linmap(const LinMap& m, SpacePtr new_src, SpacePtr new_tgt) {
  if (m.source()->dim() != new_src->dim() || m.target()->dim() != new_tgt->dim()) {
    fail(ErrorCode::SpaceMismatch, "transport between spaces of different dimension");
  }
  LinMap out(std::move(new_src), new_tgt, m.degree());
  for (int i = 0; i < m.source()->dim(); ++i) {
    Vec col(new_tgt);
    for (const auto& [j, r] : m.column(i).coeffs()) col.set_coeff(j, r);
    out.set_column(i, std::move(col));
  }
  return out;
}

InhomOp shift_brackets(const std::vector<AntiOp>& brackets, const SpacePtr& l_space) {
  InhomOp lambda(l_space, l_space, 1);
  for (const AntiOp& br : brackets) {
    const int n = br.arity();
    if (br.degree() != 2 - n) {
      fail(ErrorCode::DegreeMismatch, "unshifted bracket of arity " +
                                          std::to_string(n) + " must have degree " +
                                          std::to_string(2 - n));
    }
    if (br.space()->dim() != l_space->dim()) {
      fail(ErrorCode::SpaceMismatch, "bracket space does not match the shift");
    }
    if (n == 0) {
      Vec r(l_space);
      if (const auto it = br.coeffs().find(Key{}); it != br.coeffs().end()) {
        for (const auto& [j, c] : it->second.coeffs()) r.set_coeff(j, c);
      }
      lambda.set_part0(lambda.part0() + r);
      continue;
    }
    if (n > lambda.cap()) {
      if (!br.coeffs().empty()) {
        fail(ErrorCode::FilteredViolation, "bracket arity exceeds the filtration cap");
      }
      continue;
    }
    for (const auto& [key, value] : br.coeffs()) {
      // sign exponent sum_{i=1..n} (n-i) |x_i| in L-degrees
      int par = 0;
      for (int i = 0; i < n; ++i) {
        par += (n - 1 - i) * parity(l_space->degree(key[i]));
      }
      Vec v(l_space);
      for (const auto& [j, c] : value.coeffs()) v.set_coeff(j, c);
      if (par % 2 != 0) v *= Rat(-1);
      lambda.part(n).set_term(key, std::move(v));
    }
  }
  return lambda;
}

CurvedStructure from_dgla(const DglaData& g, const std::string& name) {
  SpacePtr l = shift_space(*g.g_space, name);
  LinMap delta = transport_linmap(g.differential, l, l);
  if (!check_linmap(delta).ok()) {
    fail(ErrorCode::FilteredViolation, "DGLA differential is not filtered");
  }
  InhomOp lambda = shift_brackets({g.bracket}, l);
  CurvedStructure s = make_structure(l, std::move(delta), std::move(lambda));
  StructureReport report = check_structure(s);
  if (!report.residual.is_zero()) {
    fail(ErrorCode::StructureInvalid,
         "shifted DGLA fails the structure equation: " + report.residual.str());
  }
  if (report.flat && !report.delta_square_zero) {
    fail(ErrorCode::StructureInvalid, "DGLA differential does not square to zero");
  }
  return s;
}

}  // namespace linfty
