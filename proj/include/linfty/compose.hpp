#pragma once

#include "linfty/eps.hpp"
#include "linfty/exec.hpp"
#include "linfty/inhomop.hpp"

namespace linfty {

/// Circle product S^i(L,M) x S^j(L,L) -> S^{i+j}(L,M):
/// (a o b)_n = sum over subsets S of the inputs of
/// +- a_{n-|S|+1}(b_{|S|}(x_S), x_rest), the empty subset feeding b's
/// arity-0 part. Equals the normalized sum over all permutations.
InhomOp circle(const InhomOp& a, const InhomOp& b, Exec exec = default_exec());

/// Composition S^i(L,M) x S^0(K,L) -> S^i(K,M): sum over unordered set
/// partitions of the inputs, each block fed to a component of b, with e
/// copies of b_0 plugged in at weight 1/e!. Equals the normalized
/// permutation sum. b must have degree 0.
InhomOp bullet(const InhomOp& a, const InhomOp& b, Exec exec = default_exec());

/// sum_n (1/n!) a_n(x,...,x) for x of degree 0 and positive weight; equals
/// the arity-0 part of bullet(a, const_op(x)).
Vec mc_apply(const InhomOp& a, const Vec& x);

/// The derivative a o_b beta defined through the eps-extension:
/// a . (b + beta eps) = a . b + (a o_b beta) eps, for b of degree 0 and
/// beta of degree 1.
InhomOp circle_b(const InhomOp& a, const InhomOp& b, const InhomOp& beta,
                 Exec exec = default_exec());

/// delta_lambda f = delta f + lambda o f - (-1)^|f| f o lambda, with the
/// hom differential taken with delta on both sides.
InhomOp delta_lambda(const InhomOp& f, const InhomOp& lambda,
                     const LinMap& delta, Exec exec = default_exec());

/// Single output coefficients, used by the arity-major fixed-point
/// iteration; `key` is a sorted multiset over the result's source space.
Vec circle_coeff(const InhomOp& a, const InhomOp& b, const Key& key);
Vec bullet_coeff(const InhomOp& a, const InhomOp& b, const Key& key);

/// Set partitions of {0..n-1} into unordered nonempty blocks, blocks
/// ordered by least element, elements ascending inside each block.
void for_each_set_partition(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn);

}  // namespace linfty
