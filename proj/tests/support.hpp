#pragma once

// Independent oracles and exhaustive checkers shared by the unit tests and the
// acceptance binary.  Oracles never call the code they check.

#include <string>
#include <vector>

#include "kunneth/e2.hpp"

namespace kunneth::testing {

/// Rank by dense fraction Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<Scalar>> rows);

/// Coefficients of prod_{i=1}^{k-1} (1 + i t): Betti numbers of Conf_k(R^2) (Arnold).
std::vector<std::size_t> arnold_betti(int k);
/// Coefficients of prod_{j=1}^{k} (1 + j t): Betti numbers of Conf_k(S^1 x R).
std::vector<std::size_t> cylinder_betti(int k);
/// Stirling numbers of the first kind: number of permutations of [n] with n - q cycles,
/// the dimension of Ger(n) in degree q.
std::size_t stirling_first(int n, int cycles);

/// Morphisms [a] -> [b] of the category of operators of Ass: surjections with a
/// linear order on each fiber, a! * C(a-1, b-1).
std::size_t ass_morphism_count(int a, int b);
/// Bar level of Ass over itself by counting layer sequences (no enumeration).
std::size_t ass_bar_count(int p, int k, bool normalized);
/// Unnormalized diagonal level of (Ass, Ass), both bar-resolved: sum over surjections
/// [k] -> [n] of prod |fiber|! (Ger decorations), times bar generators of l and m, l*m = n.
std::size_t ass_diag_count(int p, int k);

/// Trace of a permutation of cycle type `type` on H_i(Conf_k(X)) for i = 0..k,
/// read off from counts of squarefree polynomials over F_q:
///   sum_i (-1)^i tr_i q^{k-i} = z_type * #{squarefree f of factorization type `type`}.
/// plane: X = C; otherwise X = C^* (f(0) != 0).
std::vector<Scalar> squarefree_character(const std::vector<int>& type, bool plane);

/// Little-interval oracle for Ass: the word obtained by placing the intervals of b
/// inside interval i of a, listed left to right (1-based letters).
std::vector<int> interval_compose(const std::vector<int>& a, int i, const std::vector<int>& b);

/// Cyclic insertion oracle: replace point `slot` of the cyclic order `cyc` by the
/// word `w` (its letters shifted to slot..slot+|w|-1, later letters shifted), then
/// rotate so that 1 comes first.  All letters 1-based.
std::vector<int> cyclic_insert(const std::vector<int>& cyc, int slot, const std::vector<int>& w);

/// Violated simplicial identities d_i d_j = d_{j-1} d_i (i < j), d_i s_j relations,
/// for the diagonal up to level p_max, arity k and degree bound d.  Checked on the
/// simplicial object itself: single faces do not descend to the normalized quotient.
std::vector<std::string> diagonal_identity_failures(const Diagonal& diag, int k, int p_max, int d);
/// Same for the bar construction of a module.
std::vector<std::string> bar_identity_failures(const RightModule& m, int k, int p_max);
/// Every face matrix commutes with the Sigma_k action, for all sigma.
std::vector<std::string> diagonal_equivariance_failures(const Diagonal& diag, int k, int p_max, int d);
/// H_p of the augmented bar complex of m in arity k: zero for 0 < p <= p_max - 1, and
/// H_0 = m(k).  Returns the violations.
std::vector<std::string> bar_acyclicity_failures(const RightModule& m, int k, int p_max);

}  // namespace kunneth::testing
