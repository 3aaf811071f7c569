#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kunneth/linalg.hpp"

namespace kunneth {

/// A permutation of {0..n-1} in one-line form: slot i goes to perm[i].
using Permutation = std::vector<int>;

bool is_permutation(std::span<const int> perm);
Permutation identity_permutation(int n);
Permutation inverse(std::span<const int> perm);
/// (tau * sigma)[i] = tau[sigma[i]]: apply sigma first.
Permutation compose(std::span<const int> tau, std::span<const int> sigma);
/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);
/// Cycle type, sorted decreasingly.
std::vector<int> cycle_type(std::span<const int> perm);
int order(std::span<const int> perm);
/// "2 1 3" (1-based).
std::string one_line(std::span<const int> perm);
Permutation parse_one_line(const std::string& text);

/// Koszul sign of moving slot i (of degree degrees[i]) to position perm[i].
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

struct BasisElement {
  std::string label;
  int degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite graded vector space with an ordered, labelled basis.
/// Spaces built by `tensor` remember their factors.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisElement> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  /// -1 when absent.
  int index_of(const std::string& label) const;
  /// dims[d] = number of basis elements of degree d.
  std::vector<std::size_t> dims_by_degree() const;

  bool is_tensor() const { return !factors_.empty(); }
  const std::vector<GradedSpace>& factors() const { return factors_; }
  /// Factor basis indices of tensor basis element i.
  const std::vector<int>& factor_indices(std::size_t i) const { return factor_indices_[i]; }

  friend GradedSpace tensor(const std::vector<GradedSpace>& spaces);
  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, int> index_;
  std::vector<GradedSpace> factors_;
  std::vector<std::vector<int>> factor_indices_;
};

/// Tensor product; basis = tuples in lexicographic order of factor bases, labels joined by "⊗".
GradedSpace tensor(const std::vector<GradedSpace>& spaces);

/// Degree-0 linear map between graded spaces in the chosen bases.
class GradedMap {
 public:
  /// Throws std::invalid_argument if an entry connects basis elements of different degrees.
  GradedMap(std::shared_ptr<const GradedSpace> source, std::shared_ptr<const GradedSpace> target,
            SparseMatrix matrix);

  const GradedSpace& source() const { return *source_; }
  const GradedSpace& target() const { return *target_; }
  const SparseMatrix& matrix() const { return matrix_; }

 private:
  std::shared_ptr<const GradedSpace> source_;
  std::shared_ptr<const GradedSpace> target_;
  SparseMatrix matrix_;
};

/// Signed symmetry isomorphism permuting the factors of a tensor product:
/// factor i of `t` lands in position perm[i].
GradedMap permute_factors(const GradedSpace& t, std::span<const int> perm);

}  // namespace kunneth
