#include "linfty/symop.hpp"

#include <algorithm>

namespace linfty {

int key_weight(const Space& space, const Key& key) {
  int w = 0;
  for (int i : key) w += space.weight(i);
  return w;
}

int key_degree(const Space& space, const Key& key) {
  int d = 0;
  for (int i : key) d += space.degree(i);
  return d;
}

bool key_forced_zero(const Space& space, const Key& key) {
  for (std::size_t j = 0; j + 1 < key.size(); ++j) {
    if (key[j] == key[j + 1] && parity(space.degree(key[j])) == 1) return true;
  }
  return false;
}

std::pair<Key, int> sort_with_sign(Key tuple, const Space& space) {
  int par = 0;
  const int n = static_cast<int>(tuple.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n - i; ++j) {
      if (tuple[j] > tuple[j + 1]) {
        par += parity(space.degree(tuple[j])) * parity(space.degree(tuple[j + 1]));
        std::swap(tuple[j], tuple[j + 1]);
      }
    }
  }
  return {std::move(tuple), (par % 2 == 0) ? 1 : -1};
}

namespace {

void enumerate_keys(const Space& space, int arity, int max_weight, int from,
                    Key& prefix, int used_weight, std::vector<Key>& out) {
  if (static_cast<int>(prefix.size()) == arity) {
    out.push_back(prefix);
    return;
  }
  int remaining = arity - static_cast<int>(prefix.size());
  for (int i = from; i < space.dim(); ++i) {
    int w = used_weight + space.weight(i);
    // every later slot costs at least weight 1
    if (w + (remaining - 1) > max_weight) continue;
    prefix.push_back(i);
    enumerate_keys(space, arity, max_weight, i, prefix, w, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Key> keys_up_to_weight(const Space& space, int arity, int max_weight) {
  std::vector<Key> out;
  if (arity == 0) {
    out.push_back({});
    return out;
  }
  Key prefix;
  enumerate_keys(space, arity, max_weight, 0, prefix, 0, out);
  return out;
}

SymOp::SymOp(SpacePtr source, SpacePtr target, int arity, int degree)
    : src_(std::move(source)), tgt_(std::move(target)), arity_(arity),
      degree_(degree) {
  if (arity_ < 0) fail(ErrorCode::ArityMismatch, "negative arity");
}

Vec SymOp::coeff(const Key& key) const {
  const Vec* v = find(key);
  return v ? *v : Vec(tgt_);
}

const Vec* SymOp::find(const Key& key) const {
  auto it = c_.find(key);
  return it == c_.end() ? nullptr : &it->second;
}

void SymOp::validate_value(const Key& key, const Vec& value) const {
  if (!same_space(value.space(), tgt_)) {
    fail(ErrorCode::SpaceMismatch, "coefficient not in the target space");
  }
  if (value.is_zero()) return;
  if (key_forced_zero(*src_, key)) {
    fail(ErrorCode::SymmetryViolation,
         "nonzero coefficient on a repeated odd-degree element");
  }
  int want_degree = key_degree(*src_, key) + degree_;
  if (!value.is_homogeneous(want_degree)) {
    fail(ErrorCode::DegreeMismatch,
         "coefficient not homogeneous of degree " + std::to_string(want_degree));
  }
  if (value.weight() < key_weight(*src_, key)) {
    fail(ErrorCode::FilteredViolation,
         "coefficient weight " + std::to_string(value.weight()) +
             " below key weight " + std::to_string(key_weight(*src_, key)));
  }
}

void SymOp::set_term(Key tuple, Vec value) {
  if (static_cast<int>(tuple.size()) != arity_) {
    fail(ErrorCode::ArityMismatch, "key size does not match arity");
  }
  for (int i : tuple) {
    if (i < 0 || i >= src_->dim()) {
      fail(ErrorCode::SpaceMismatch, "key index out of range");
    }
  }
  auto [key, sign] = sort_with_sign(std::move(tuple), *src_);
  if (sign < 0) value *= Rat(-1);
  validate_value(key, value);
  if (value.is_zero()) {
    c_.erase(key);
  } else {
    c_[key] = std::move(value);
  }
}

void SymOp::add_term(Key tuple, Vec value) {
  if (static_cast<int>(tuple.size()) != arity_) {
    fail(ErrorCode::ArityMismatch, "key size does not match arity");
  }
  auto [key, sign] = sort_with_sign(std::move(tuple), *src_);
  if (sign < 0) value *= Rat(-1);
  Vec total = coeff(key) + value;
  validate_value(key, total);
  if (total.is_zero()) {
    c_.erase(key);
  } else {
    c_[key] = std::move(total);
  }
}

Vec SymOp::eval(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    fail(ErrorCode::ArityMismatch, "wrong number of arguments");
  }
  for (const Vec& a : args) {
    if (!same_space(a.space(), src_)) {
      fail(ErrorCode::SpaceMismatch, "argument not in the source space");
    }
  }
  Vec out(tgt_);
  if (arity_ == 0) {
    // no stored coefficient for the empty key outside InhomOp's part0
    return out;
  }
  // multilinear expansion over the supports
  Key tuple(arity_, 0);
  std::vector<std::map<int, Rat>::const_iterator> its(arity_);
  std::function<void(int, Rat)> walk = [&](int slot, Rat scalar) {
    if (slot == arity_) {
      auto [key, sign] = sort_with_sign(tuple, *src_);
      if (key_forced_zero(*src_, key)) return;
      const Vec* cv = find(key);
      if (!cv) return;
      Rat s = scalar;
      if (sign < 0) s = -s;
      out += s * *cv;
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

Vec SymOp::eval_basis(const Key& sorted_key) const {
  if (static_cast<int>(sorted_key.size()) != arity_) {
    fail(ErrorCode::ArityMismatch, "wrong key size");
  }
  if (key_forced_zero(*src_, sorted_key)) return Vec(tgt_);
  return coeff(sorted_key);
}

bool SymOp::operator==(const SymOp& other) const {
  return arity_ == other.arity_ && degree_ == other.degree_ &&
         same_space(src_, other.src_) && same_space(tgt_, other.tgt_) &&
         c_ == other.c_;
}

}  // namespace linfty
