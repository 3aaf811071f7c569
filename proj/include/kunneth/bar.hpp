#pragma once

#include <climits>
#include <unordered_map>

#include "kunneth/module.hpp"

namespace kunneth {

/// Composable layers out of [arity] followed by an element of M at the far end:
/// [arity] -> [n_1] -> ... -> [n_L], terminal basis element of M(n_L).
struct Chain {
  int arity = 0;
  std::vector<Morphism> layers;
  int terminal = 0;

  int target_arity() const { return layers.empty() ? arity : layers.back().target(); }
  friend auto operator<=>(const Chain&, const Chain&) = default;
  friend bool operator==(const Chain&, const Chain&) = default;
};

using ChainCombination = std::vector<std::pair<Chain, Scalar>>;

int chain_degree(const RightModule& m, const Chain& c);
std::string chain_label(const RightModule& m, const Chain& c);
/// Flat integer encoding, injective on chains; used as a hash key.
std::vector<int> encode(const Chain& c);

struct IntVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

/// Position j < L-1 composes layers j and j+1; position L-1 lets the last layer act
/// on the terminal element.
ChainCombination chain_face(const RightModule& m, const Chain& c, int position);
/// Inserts an identity layer so that it becomes layer `position`.
Chain chain_insert_identity(const Chain& c, int position);

/// All chains with `layers` layers out of [k] and total degree at most max_degree.
std::vector<Chain> chains(const RightModule& m, int k, int layers, int max_degree = INT_MAX);

/// Level p of the two-sided bar construction B(M, O, O) in arity k: chains with
/// p + 1 layers.  Faces d_0..d_p are the chain faces; s_i inserts an identity as
/// layer i + 1.  The normalized level drops chains with an identity among layers 1..p.
class BarLevel {
 public:
  BarLevel(const RightModule& m, int p, int k, bool normalized, int max_degree = INT_MAX);

  int level() const { return p_; }
  int arity() const { return k_; }
  bool normalized() const { return normalized_; }
  std::size_t size() const { return words_.size(); }
  const Chain& word(std::size_t i) const { return words_[i]; }
  const std::vector<Chain>& words() const { return words_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  /// -1 when absent.
  int index_of(const Chain& c) const;
  GradedSpace space(const RightModule& m) const;

 private:
  int p_, k_;
  bool normalized_;
  std::vector<Chain> words_;
  std::vector<int> degrees_;
  std::unordered_map<std::vector<int>, int, IntVectorHash> index_;
};

bool is_degenerate(const Chain& bar_word);

ChainCombination bar_face(const RightModule& m, const Chain& w, int i);
Chain bar_degeneracy(const Chain& w, int i);
/// Level 0 to M(k): the single layer acts on the terminal element.
SparseVec augmentation(const RightModule& m, const Chain& w);

/// Sum of (-1)^i d_i from `source` to `target` (levels p and p-1); in the normalized
/// complex degenerate terms are dropped.
SparseMatrix bar_differential(const RightModule& m, const BarLevel& source, const BarLevel& target);
/// Augmentation from level 0 to M(k) as a matrix.
SparseMatrix augmentation_matrix(const RightModule& m, const BarLevel& level0);

}  // namespace kunneth
