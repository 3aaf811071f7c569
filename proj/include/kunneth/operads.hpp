#pragma once

#include <map>
#include <memory>
#include <shared_mutex>

#include "kunneth/cache.hpp"
#include "kunneth/operad.hpp"

namespace kunneth {

/// Associative operad: Ass(n) is spanned by the words listing 1..n in the order
/// the points sit on a line.  Basis in lexicographic order, labels like "[2,1,3]".
class AssOperad : public Operad {
 public:
  explicit AssOperad(int max_arity);

  const GradedSpace& component(int n) const override;
  SparseVec relabel(int n, std::span<const int> perm, int a) const override;
  SparseVec compose(int n, int i, int m, int a, int b) const override;

  const Permutation& word(int n, int a) const { return words_[n - 1][a]; }
  int index_of(std::span<const int> word) const;

 private:
  std::vector<GradedSpace> components_;
  std::vector<std::vector<Permutation>> words_;
};

/// Gerstenhaber operad (homology of little disks) with a degree-1 bracket.
///
/// Basis of Ger(n): products of Lie monomials over a set partition of the letters.
/// Each block is a left-normed comb [..[x_a, x_b], x_c..] whose first letter is the
/// smallest of the block; blocks are ordered by their smallest letter.  A block of
/// size s has degree s - 1.  Labels list the combs, e.g. "[1,3,2][4]".
///
/// Partial compositions substitute into the algebra operations, with the Koszul
/// sign of moving the inserted operation past the brackets it crosses: those of
/// later blocks, and those of its own comb whose left argument contains it.
/// Tables are computed on first use, memoized, and optionally persisted.
class GerOperad : public Operad {
 public:
  using Word = std::vector<int>;
  using Forest = std::vector<Word>;

  explicit GerOperad(int max_arity, std::shared_ptr<const TableCache> cache = nullptr);

  const GradedSpace& component(int n) const override;
  SparseVec relabel(int n, std::span<const int> perm, int a) const override;
  SparseVec compose(int n, int i, int m, int a, int b) const override;
  std::string table_version() const override { return "ger-comb-1"; }

  const Forest& forest(int n, int a) const { return forests_[n - 1][a]; }
  /// -1 when the forest is not in normal form.
  int index_of(const Forest& f) const;
  /// The commutative product x_1 x_2 ... x_n.
  int product_monomial(int n) const;
  /// Bracket and product of normal-form forests whose letters together are 0..n-1;
  /// the result lies in Ger(n).
  SparseVec bracket(const Forest& x, const Forest& y) const;
  SparseVec product(const Forest& x, const Forest& y) const;

 private:
  const std::vector<SparseVec>& partial_table(int n, int i, int m) const;
  const std::vector<SparseVec>& sigma_table(int n, const Permutation& perm) const;

  std::vector<GradedSpace> components_;
  std::vector<std::vector<Forest>> forests_;
  std::vector<std::map<Forest, int>> index_;
  std::shared_ptr<const TableCache> cache_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<SparseVec>>> partial_;
  mutable std::map<std::pair<int, Permutation>, std::unique_ptr<std::vector<SparseVec>>> sigma_;
};

/// a * b in Ger(i*j) for degree-0 elements a of an operad in arity i and b in arity j,
/// identifying [i] x [j] with [i*j] lexicographically.  For associative operations
/// this is the commutative product monomial, weighted by the coefficient sums.
OperadElement interchange_element(const Operad& left, const OperadElement& a, const Operad& right,
                                  const OperadElement& b, const GerOperad& ger);

}  // namespace kunneth
