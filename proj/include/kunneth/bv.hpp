#pragma once

#include <climits>
#include <memory>

#include "kunneth/bar.hpp"
#include "kunneth/operads.hpp"

namespace kunneth {

/// (x * y)(n) = direct sum over l*m = n of x(l) (x) y(m), ordered by l; in arity 0
/// only the (0, 0) summand.  Labels "(l,m|x-label|y-label)".
GradedSpace sequence_tensor(const std::vector<GradedSpace>& x, const std::vector<GradedSpace>& y, int n);

/// How a factor of the diagonal is resolved.  Bar uses the bar construction;
/// Free uses the factor itself as a constant simplicial module, which requires a
/// free presentation (its generators then stand in for bar generators at every level).
enum class Resolution { Bar, Free };

struct DiagFactor {
  std::shared_ptr<const RightModule> module;
  Resolution resolution = Resolution::Bar;
};

/// Basis element of a diagonal level: an outer Ger-decorated surjection [k] -> [l*m]
/// and generators x (of the left factor, arity l) and y (right factor, arity m).
/// A bar generator at level p is a chain with p layers; a free generator is a chain
/// with no layers whose terminal indexes the free generators.
struct DiagWord {
  Morphism outer;
  int l = 0, m = 0;
  Chain x, y;
  friend auto operator<=>(const DiagWord&, const DiagWord&) = default;
  friend bool operator==(const DiagWord&, const DiagWord&) = default;
};

using DiagCombination = std::vector<std::pair<DiagWord, Scalar>>;

/// Context shared by the diagonal operations: the two factors and Ger.
/// Throws std::invalid_argument when a factor is not over a degree-0 operad
/// or a Free factor has no free presentation.
class Diagonal {
 public:
  Diagonal(DiagFactor left, DiagFactor right, std::shared_ptr<const GerOperad> ger);

  const DiagFactor& left() const { return left_; }
  const DiagFactor& right() const { return right_; }
  const GerOperad& ger() const { return *ger_; }

  /// Generators of one factor at level p in arity a, degree at most max_degree.
  std::vector<Chain> generators(bool left, int p, int a, int max_degree = INT_MAX) const;
  int generator_degree(bool left, const Chain& g) const;
  /// Is layer j of generator g an identity?  Always true for free generators.
  bool identity_layer(bool left, const Chain& g, int j) const;

  int degree(const DiagWord& w) const;
  bool is_degenerate(const DiagWord& w, int p) const;
  std::string label(const DiagWord& w) const;
  std::vector<int> encode(const DiagWord& w) const;

  /// Face d_i at level p.  d_0 strips the first layers of x and y and composes
  /// their interchange onto the outer morphism; d_i for i >= 1 applies the chain
  /// face at position i-1 to both generators.
  DiagCombination face(int p, int i, const DiagWord& w) const;
  /// s_i: identity inserted at generator position i in both x and y.
  DiagWord degeneracy(int p, int i, const DiagWord& w) const;
  /// Left action of sigma in Sigma_k: precompose the outer morphism with sigma^{-1}.
  DiagCombination relabel(const Permutation& sigma, const DiagWord& w) const;

 private:
  const DiagFactor& side(bool left) const { return left ? left_ : right_; }
  DiagFactor left_, right_;
  std::shared_ptr<const GerOperad> ger_;
};

/// Diagonal level p in arity k, words sorted by degree (stable), degree at most max_degree.
class DiagLevel {
 public:
  DiagLevel(const Diagonal& diag, int p, int k, bool normalized, int max_degree = INT_MAX);

  int level() const { return p_; }
  int arity() const { return k_; }
  bool normalized() const { return normalized_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return words_.size(); }
  const DiagWord& word(std::size_t i) const { return words_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  int index_of(const DiagWord& w) const;
  /// Half-open index range of the words of degree q.
  std::pair<std::size_t, std::size_t> degree_range(int q) const;
  GradedSpace space() const;

 private:
  const Diagonal* diag_;
  int p_, k_;
  bool normalized_;
  int max_degree_;
  std::vector<DiagWord> words_;
  std::vector<int> degrees_;
  std::unordered_map<std::vector<int>, int, IntVectorHash> index_;
};

/// Independent count of dim DiagLevel: sum over surjections and splits of
/// Ger-fiber dimensions times generator counts, filtered by the joint-identity rule.
std::size_t diag_level_count(const Diagonal& diag, int p, int k, bool normalized, int max_degree = INT_MAX);

/// Sum of (-1)^i d_i restricted to degree q, from level p to level p-1.
SparseMatrix diag_differential(const Diagonal& diag, const DiagLevel& source, const DiagLevel& target, int q);
/// Face d_i (or degeneracy s_i) as a matrix between the given levels, all degrees.
SparseMatrix diag_face_matrix(const Diagonal& diag, const DiagLevel& source, const DiagLevel& target, int i);
SparseMatrix diag_degeneracy_matrix(const Diagonal& diag, const DiagLevel& source, const DiagLevel& target, int i);
/// Action of sigma on a level restricted to degree q.
SparseMatrix diag_sigma_matrix(const Diagonal& diag, const DiagLevel& level, const Permutation& sigma, int q);

}  // namespace kunneth
