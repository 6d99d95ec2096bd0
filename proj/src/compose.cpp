#include "linfty/compose.hpp"

namespace linfty {

namespace {

Exec g_default_exec = Exec::Parallel;

void check_circle_spaces(const InhomOp& a, const InhomOp& b) {
  if (!same_space(b.source(), b.target()) ||
      !same_space(a.source(), b.source())) {
    fail(ErrorCode::SpaceMismatch, "circle requires b in S(L,L) with L = source of a");
  }
}

void check_bullet_spaces(const InhomOp& a, const InhomOp& b) {
  if (!same_space(a.source(), b.target())) {
    fail(ErrorCode::SpaceMismatch, "bullet requires target of b = source of a");
  }
  if (b.degree() != 0) {
    fail(ErrorCode::DegreeMismatch, "bullet requires b of degree 0");
  }
}

std::vector<int> key_degrees(const Space& space, const Key& key) {
  std::vector<int> degs(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) degs[i] = space.degree(key[i]);
  return degs;
}

void partitions_walk(int n, int next, std::vector<std::vector<int>>& blocks,
                     const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  if (next == n) {
    fn(blocks);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(next);
    partitions_walk(n, next + 1, blocks, fn);
    blocks[b].pop_back();
  }
  blocks.push_back({next});
  partitions_walk(n, next + 1, blocks, fn);
  blocks.pop_back();
}

/// Koszul sign of rearranging the key into the concatenation of the blocks.
int partition_sign(const std::vector<std::vector<int>>& blocks,
                   const std::vector<int>& degs) {
  std::vector<int> order;
  order.reserve(degs.size());
  for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());
  return koszul_sign(std::move(order), degs);
}

/// Assembles an operator whose arity-n coefficients come from
/// coeff_fn(key); loops over keys run under the requested execution mode.
InhomOp assemble(SpacePtr src, SpacePtr tgt, int degree, Exec exec,
                 const std::function<Vec(const Key&)>& coeff_fn) {
  InhomOp out(src, tgt, degree);
  int max_w = tgt->filtration_length() - 1;
  {
    Vec v0 = coeff_fn({});
    if (!v0.is_zero()) out.set_part0(std::move(v0));
  }
  for (int n = 1; n <= out.cap(); ++n) {
    std::vector<Key> keys = keys_up_to_weight(*src, n, max_w);
    std::vector<Vec> values(keys.size(), Vec(tgt));
    parallel_for(keys.size(), exec,
                 [&](std::size_t i) { values[i] = coeff_fn(keys[i]); });
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (!values[i].is_zero()) {
        out.part(n).set_term(keys[i], std::move(values[i]));
      }
    }
  }
  return out;
}

}  // namespace

Exec default_exec() { return g_default_exec; }
void set_default_exec(Exec mode) { g_default_exec = mode; }

void for_each_set_partition(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> blocks;
  partitions_walk(n, 0, blocks, fn);
}

EpsVec eval_eps(const SymOp& a, std::span<const EpsVec> args,
                const std::vector<int>& nominal_degrees) {
  std::vector<Vec> bodies;
  bodies.reserve(args.size());
  for (const EpsVec& v : args) bodies.push_back(v.body);
  EpsVec out(a.target());
  out.body = a.eval(bodies);
  int par = parity(a.degree());
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (!args[j].soul.is_zero()) {
      std::vector<Vec> mixed = bodies;
      mixed[j] = args[j].soul;
      Vec term = a.eval(mixed);
      if (par % 2 != 0) term *= Rat(-1);
      out.soul += term;
    }
    par += parity(nominal_degrees[j]);
  }
  return out;
}

Vec circle_coeff(const InhomOp& a, const InhomOp& b, const Key& key) {
  const Space& src = *a.source();
  const int n = static_cast<int>(key.size());
  std::vector<int> degs = key_degrees(src, key);
  Vec out(a.target());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    Vec val_b(b.target());
    if (k == 0) {
      val_b = b.part0();
    } else if (k <= b.cap()) {
      Key sub;
      sub.reserve(k);
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(key[i]);
      }
      val_b = b.part(k).eval_basis(sub);
    }
    if (val_b.is_zero()) continue;
    int arity_a = n - k + 1;
    if (arity_a > a.cap()) continue;
    std::vector<Vec> args;
    args.reserve(arity_a);
    args.push_back(std::move(val_b));
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) args.push_back(Vec::basis_vector(a.source(), key[i]));
    }
    Vec term = a.part(arity_a).eval(args);
    if (term.is_zero()) continue;
    if (unshuffle_sign(degs, mask) < 0) term *= Rat(-1);
    out += term;
  }
  return out;
}

Vec bullet_coeff(const InhomOp& a, const InhomOp& b, const Key& key) {
  const Space& src = *b.source();
  const int n = static_cast<int>(key.size());
  std::vector<int> degs = key_degrees(src, key);
  Vec out(a.target());
  const bool has_b0 = !b.part0().is_zero();

  for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    const int m = static_cast<int>(blocks.size());
    if (m > a.cap()) return;
    std::vector<Vec> vals;
    vals.reserve(m);
    for (const auto& block : blocks) {
      int sz = static_cast<int>(block.size());
      if (sz > b.cap()) return;
      Key sub;
      sub.reserve(sz);
      for (int pos : block) sub.push_back(key[pos]);
      Vec v = b.part(sz).eval_basis(sub);
      if (v.is_zero()) return;
      vals.push_back(std::move(v));
    }
    Rat sign(partition_sign(blocks, degs));
    if (m == 0) out += sign * a.part0();
    for (int e = (m == 0) ? 1 : 0; m + e <= a.cap(); ++e) {
      if (e > 0 && !has_b0) break;
      std::vector<Vec> args;
      args.reserve(m + e);
      for (int i = 0; i < e; ++i) args.push_back(b.part0());
      for (const Vec& v : vals) args.push_back(v);
      Vec term = a.part(m + e).eval(args);
      if (!term.is_zero()) out += sign * inv_factorial(e) * term;
    }
  });
  return out;
}

InhomOp circle(const InhomOp& a, const InhomOp& b, Exec exec) {
  check_circle_spaces(a, b);
  return assemble(a.source(), a.target(), a.degree() + b.degree(), exec,
                  [&](const Key& key) { return circle_coeff(a, b, key); });
}

InhomOp bullet(const InhomOp& a, const InhomOp& b, Exec exec) {
  check_bullet_spaces(a, b);
  return assemble(b.source(), a.target(), a.degree(), exec,
                  [&](const Key& key) { return bullet_coeff(a, b, key); });
}

Vec mc_apply(const InhomOp& a, const Vec& x) {
  if (!same_space(x.space(), a.source())) {
    fail(ErrorCode::SpaceMismatch, "argument not in the source space");
  }
  if (!x.is_homogeneous(0)) {
    fail(ErrorCode::DegreeMismatch, "Maurer-Cartan argument must have degree 0");
  }
  Vec out = a.part0();
  std::vector<Vec> args;
  for (int nn = 1; nn <= a.cap(); ++nn) {
    args.assign(nn, x);
    Vec term = a.part(nn).eval(args);
    if (!term.is_zero()) out += inv_factorial(nn) * term;
  }
  return out;
}

InhomOp circle_b(const InhomOp& a, const InhomOp& b, const InhomOp& beta,
                 Exec exec) {
  check_bullet_spaces(a, b);
  if (beta.degree() != b.degree() + 1) {
    fail(ErrorCode::DegreeMismatch, "beta must have degree 1");
  }
  if (!same_space(beta.source(), b.source()) ||
      !same_space(beta.target(), b.target())) {
    fail(ErrorCode::SpaceMismatch, "beta must live in the same spaces as b");
  }
  const Space& src = *b.source();
  const bool has_plug = !b.part0().is_zero() || !beta.part0().is_zero();
  const int conv_sign = (parity(a.degree()) == 0) ? 1 : -1;

  auto coeff_fn = [&](const Key& key) {
    const int n = static_cast<int>(key.size());
    std::vector<int> degs = key_degrees(src, key);
    EpsVec acc(a.target());
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
      const int m = static_cast<int>(blocks.size());
      if (m > a.cap()) return;
      std::vector<EpsVec> vals;
      std::vector<int> val_degs;
      vals.reserve(m);
      for (const auto& block : blocks) {
        int sz = static_cast<int>(block.size());
        if (sz > b.cap()) return;
        Key sub;
        sub.reserve(sz);
        for (int pos : block) sub.push_back(key[pos]);
        EpsVec v(b.part(sz).eval_basis(sub), beta.part(sz).eval_basis(sub));
        if (v.is_zero()) return;
        int d = 0;
        for (int pos : block) d += degs[pos];
        vals.push_back(std::move(v));
        val_degs.push_back(d);
      }
      Rat sign(partition_sign(blocks, degs));
      for (int e = 0; m + e <= a.cap(); ++e) {
        if (e > 0 && !has_plug) break;
        if (m + e == 0) continue;  // a_0 has no soul contribution
        std::vector<EpsVec> args;
        std::vector<int> arg_degs;
        args.reserve(m + e);
        for (int i = 0; i < e; ++i) {
          args.emplace_back(b.part0(), beta.part0());
          arg_degs.push_back(0);
        }
        for (std::size_t i = 0; i < vals.size(); ++i) {
          args.push_back(vals[i]);
          arg_degs.push_back(val_degs[i]);
        }
        EpsVec term = eval_eps(a.part(m + e), args, arg_degs);
        if (!term.soul.is_zero()) {
          acc.soul += sign * inv_factorial(e) * term.soul;
        }
      }
    });
    Vec result = std::move(acc.soul);
    if (conv_sign < 0) result *= Rat(-1);
    return result;
  };
  return assemble(b.source(), a.target(), a.degree() + 1, exec, coeff_fn);
}

InhomOp delta_lambda(const InhomOp& f, const InhomOp& lambda,
                     const LinMap& delta, Exec exec) {
  if (lambda.degree() != 1) {
    fail(ErrorCode::DegreeMismatch, "lambda must have degree 1");
  }
  InhomOp out = hom_differential(f, delta, delta);
  out += circle(lambda, f, exec);
  InhomOp right = circle(f, lambda, exec);
  if (parity(f.degree()) == 0) {
    out -= right;
  } else {
    out += right;
  }
  return out;
}

}  // namespace linfty
