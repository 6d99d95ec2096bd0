#include "linfty/inhomop.hpp"

#include <sstream>

namespace linfty {

InhomOp::InhomOp(SpacePtr source, SpacePtr target, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), degree_(degree),
      part0_(tgt_) {
  int cap = tgt_->filtration_length() - 1;
  parts_.reserve(cap);
  for (int n = 1; n <= cap; ++n) {
    parts_.emplace_back(src_, tgt_, n, degree_);
  }
}

InhomOp InhomOp::identity(SpacePtr space) {
  return embed_linmap(LinMap::identity(std::move(space)));
}

void InhomOp::set_part0(Vec v) {
  if (!same_space(v.space(), tgt_)) {
    fail(ErrorCode::SpaceMismatch, "arity-0 part not in the target space");
  }
  if (!v.is_zero() && !v.is_homogeneous(degree_)) {
    fail(ErrorCode::DegreeMismatch, "arity-0 part not of the operator degree");
  }
  if (!v.is_zero() && v.weight() < 1) {
    fail(ErrorCode::FilteredViolation, "arity-0 part must lie in F_1");
  }
  part0_ = std::move(v);
}

bool InhomOp::is_zero() const {
  if (!part0_.is_zero()) return false;
  for (const SymOp& p : parts_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

InhomOp& InhomOp::operator+=(const InhomOp& other) {
  if (!same_space(src_, other.src_) || !same_space(tgt_, other.tgt_)) {
    fail(ErrorCode::SpaceMismatch, "operator addition across different spaces");
  }
  if (degree_ != other.degree_) {
    fail(ErrorCode::DegreeMismatch, "operator addition across different degrees");
  }
  part0_ += other.part0_;
  for (int n = 1; n <= cap(); ++n) {
    for (const auto& [key, value] : other.part(n).coeffs()) {
      part(n).add_term(key, value);
    }
  }
  return *this;
}

InhomOp& InhomOp::operator-=(const InhomOp& other) {
  *this += Rat(-1) * other;
  return *this;
}

InhomOp& InhomOp::operator*=(const Rat& s) {
  part0_ *= s;
  for (int n = 1; n <= cap(); ++n) {
    SymOp scaled(src_, tgt_, n, degree_);
    for (const auto& [key, value] : part(n).coeffs()) {
      scaled.set_term(key, s * value);
    }
    part(n) = std::move(scaled);
  }
  return *this;
}

bool InhomOp::operator==(const InhomOp& other) const {
  if (!same_space(src_, other.src_) || !same_space(tgt_, other.tgt_) ||
      degree_ != other.degree_) {
    return false;
  }
  if (!(part0_ == other.part0_)) return false;
  for (int n = 1; n <= cap(); ++n) {
    if (!(part(n) == other.part(n))) return false;
  }
  return true;
}

std::string InhomOp::str() const {
  std::ostringstream os;
  os << "S^" << degree_ << "(" << src_->name() << "," << tgt_->name() << ")";
  if (!part0_.is_zero()) os << " [0] " << part0_.str();
  for (int n = 1; n <= cap(); ++n) {
    for (const auto& [key, value] : part(n).coeffs()) {
      os << " [" << n << "](";
      for (std::size_t j = 0; j < key.size(); ++j) {
        if (j) os << ",";
        os << src_->basis(key[j]).name;
      }
      os << ") = " << value.str();
    }
  }
  return os.str();
}

InhomOp embed_linmap(const LinMap& m) {
  InhomOp out(m.source(), m.target(), m.degree());
  if (out.cap() >= 1) {
    for (int i = 0; i < m.source()->dim(); ++i) {
      if (!m.column(i).is_zero()) {
        out.part(1).set_term({i}, m.column(i));
      }
    }
  } else if (!m.is_zero()) {
    fail(ErrorCode::FilteredViolation,
         "nonzero map into a space with trivial filtration");
  }
  return out;
}

InhomOp const_op(SpacePtr source, const Vec& x) {
  auto deg = x.degree();
  InhomOp out(std::move(source), x.space(), deg.value_or(0));
  out.set_part0(x);
  return out;
}

int s_filtration_degree(const InhomOp& a) {
  int k = kInfWeight;
  if (!a.part0().is_zero()) k = std::min(k, a.part0().weight());
  for (int n = 1; n <= a.cap(); ++n) {
    for (const auto& [key, value] : a.part(n).coeffs()) {
      k = std::min(k, value.weight() - key_weight(*a.source(), key));
    }
  }
  return k;
}

InhomOp hom_differential(const InhomOp& a, const LinMap& delta_src,
                         const LinMap& d_tgt) {
  if (delta_src.degree() != 1 || d_tgt.degree() != 1) {
    fail(ErrorCode::DegreeMismatch, "differentials must have degree +1");
  }
  if (!same_space(delta_src.source(), a.source()) ||
      !same_space(delta_src.target(), a.source()) ||
      !same_space(d_tgt.source(), a.target()) ||
      !same_space(d_tgt.target(), a.target())) {
    fail(ErrorCode::SpaceMismatch, "differentials do not match operator spaces");
  }
  const Space& src = *a.source();
  InhomOp out(a.source(), a.target(), a.degree() + 1);
  int op_sign = (parity(a.degree()) == 0) ? 1 : -1;

  out.set_part0(d_tgt.apply(a.part0()));
  for (int n = 1; n <= a.cap(); ++n) {
    int max_w = a.target()->filtration_length() - 1;
    for (const Key& key : keys_up_to_weight(src, n, max_w)) {
      Vec value = d_tgt.apply(a.part(n).eval_basis(key));
      int prefix_par = 0;
      for (int j = 0; j < n; ++j) {
        const Vec& dx = delta_src.column(key[j]);
        if (!dx.is_zero()) {
          std::vector<Vec> args;
          args.reserve(n);
          for (int l = 0; l < n; ++l) {
            args.push_back(l == j ? dx : Vec::basis_vector(a.source(), key[l]));
          }
          Vec term = a.part(n).eval(args);
          int s = op_sign * ((prefix_par % 2 == 0) ? 1 : -1);
          value -= Rat(s) * term;
        }
        prefix_par += parity(src.degree(key[j]));
      }
      if (!value.is_zero()) out.part(n).set_term(key, std::move(value));
    }
  }
  return out;
}

InhomOp linmap_post(const LinMap& m, const InhomOp& a) {
  if (!same_space(m.source(), a.target())) {
    fail(ErrorCode::SpaceMismatch, "post-composition spaces do not match");
  }
  InhomOp out(a.source(), m.target(), a.degree() + m.degree());
  out.set_part0(m.apply(a.part0()));
  int shared_cap = std::min(out.cap(), a.cap());
  for (int n = 1; n <= shared_cap; ++n) {
    for (const auto& [key, value] : a.part(n).coeffs()) {
      Vec img = m.apply(value);
      if (!img.is_zero()) out.part(n).set_term(key, std::move(img));
    }
  }
  // components beyond the new cap must die under a filtered m
  for (int n = shared_cap + 1; n <= a.cap(); ++n) {
    for (const auto& [key, value] : a.part(n).coeffs()) {
      if (!m.apply(value).is_zero()) {
        fail(ErrorCode::FilteredViolation,
             "post-composition does not vanish beyond the target cap");
      }
    }
  }
  return out;
}

}  // namespace linfty
